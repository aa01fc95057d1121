#pragma once

#include <jetsym/prolong.hpp>

#include <string>
#include <vector>

namespace jetsym {

/// Index range with a diagonal metric used for contractions.
struct IndexSpace {
    std::vector<BaseVar> vars;
    std::vector<int> signs;

    std::size_t size() const { return vars.size(); }
};

/// x0..x3 with the derivative-type signs (-1, 1, 1, 1).
IndexSpace greek();
/// x1, x2 with Euclidean signs.
IndexSpace latin();
/// The space a function's derivatives are contracted over.
IndexSpace natural_space(FunctionId f);

using Vec = std::vector<Expr>;
using Mat = std::vector<Vec>;

Vec gradient(FunctionId f, const IndexSpace& s);
Mat hessian(FunctionId f, const IndexSpace& s);
Vec conjugate(const Vec& v);
Mat conjugate(const Mat& t);

/// tr((eta t)^k).
Expr S_k(const Mat& t, int k, const IndexSpace& s);
/// tr((eta t1)^j (eta t2)^(k-j)).
Expr S_jk(const Mat& t1, const Mat& t2, int j, int k, const IndexSpace& s);
/// v_{a1} v_{ak} t_{a1a2} ... t_{a(k-1)ak}, every repeated index weighted by the metric.
Expr R_k(const Vec& v, const Mat& t, int k, const IndexSpace& s);

/// Sign conventions selectable for the wave-space projective operator.
enum class XSquare { spatial, lorentz };

struct Settings {
    int n_wave = 3;
    int n_schrodinger = 2;
};

std::vector<VectorField> poincare_algebra();
/// d_tau, d_1, d_2, J_12, G_1, G_2, J, with components for Phi and phi.
std::vector<VectorField> galilei_algebra();
/// Boost without the mass factor, as printed in the source formula.
VectorField galilei_boost_massless(int a);
VectorField dilation();
VectorField projective_A();
/// weight_sign = -1 gives the invariance-preserving coefficient
/// -((n-1)/2)(x0-x3); +1 reproduces the printed sign.
VectorField projective_A1(int n, XSquare x2 = XSquare::spatial, int weight_sign = -1);

// Wave-setting building blocks.
Expr box(FunctionId f);
Expr condition();
Expr wave_equation();

// Reduced-setting building blocks over phi.
Expr M1(const Settings& = {});
Expr M2();
Expr N1();
/// printed = true keeps the +phi_aa^2/(2n) sign of the source formula, which
/// breaks covariance under A; the default uses -phi_aa^2/(2n).
Expr N2(const Settings& s = {}, bool printed = false);
Vec theta();
Mat rho_tensor(const Settings& s = {});
Vec rho_vector();

struct CatalogEntry {
    std::string name;
    /// Which family of objects the entry belongs to.
    std::string group;
    Expr expr;
    std::string note;
};

std::vector<CatalogEntry> poincare_basis();
std::vector<CatalogEntry> galilei_basis();
std::vector<CatalogEntry> extended_basis(const Settings& s = {});

/// A conditional invariant in both forms.
struct ConditionalInvariant {
    std::string name;
    Expr u_form;
    Expr phi_form;
    /// False for the printed negative controls that are not invariant.
    bool expected_invariant = true;
    /// False when the u-form and phi-form are not expected to agree.
    bool expected_round_trip = true;
    std::string note;
};

std::vector<ConditionalInvariant> conditional_invariants(const Settings& s = {});

/// Every named expression (bases, invariants, building blocks) by stable name.
std::vector<CatalogEntry> all_entries(const Settings& s = {});
const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& name);

/// Every named operator: P0..P3, J01..J23, dtau, d1, d2, J12, G1, G2, J, D,
/// A, A1 and their printed or alternative variants.
std::vector<VectorField> all_operators(const Settings& s = {});
std::optional<VectorField> find_operator(const std::string& name, const Settings& s = {});

} // namespace jetsym
