#pragma once

#include <jetsym/prolong.hpp>
#include <jetsym/rewrite.hpp>

#include <optional>
#include <string>
#include <vector>

namespace jetsym {

enum class Verdict { absolute, relative, conditional, fails };

std::string to_string(Verdict v);

struct InvarianceReport {
    std::string subject;
    std::string op;
    Verdict verdict = Verdict::fails;
    /// lambda for relative invariants.
    std::optional<Expr> factor;
    /// One residual per checked expression, after reduction; all zero on a pass.
    std::vector<Expr> residuals;
    int order_used = 0;
    /// Set when the zero test multiplied through by compound denominators.
    bool assumes_nonzero_denominators = false;

    bool passed() const { return verdict != Verdict::fails; }
};

/// A constraint together with the jet it is solved for and the derivative
/// directions of its consequences (empty: the function's whole domain).
struct Equation {
    Expr expr;
    JetVar solve_for;
    std::vector<BaseVar> directions;
};

/// The equation and its complex conjugate partner.
std::vector<Equation> with_conjugates(const Equation& eq);

std::vector<InvarianceReport> check_absolute(const std::vector<VectorField>& generators, const Expr& F, int l,
                                             const std::string& subject = "F");

/// lambda with X_l F = lambda F: exact monomial division, or Laurent division
/// of the residual by F. Zero for absolute invariants; nothing when no exact
/// quotient is found.
std::optional<Expr> relative_factor(const VectorField& X, const Expr& F, int l);

/// Builds one rewrite system from the equations (each reduced modulo the
/// earlier ones before solving) and reduces X_l E for every equation E.
RewriteSystem build_system(const std::vector<Equation>& equations, int l);
InvarianceReport check_system_invariance(const VectorField& X, const std::vector<Equation>& equations, int l,
                                         const std::string& subject = "system");

/// X_l F = 0 and X_l G = 0 modulo the consequences of G, with l raised to
/// the order of G when needed. With include_conjugate, G* joins the system.
InvarianceReport check_conditional_invariant(const VectorField& X, const Expr& F, const Equation& G, int l,
                                             bool include_conjugate = true, const std::string& subject = "F");

/// G = sum xi^i u_i - eta for the scalar function f (Q-conditional invariance).
Equation q_condition(const VectorField& Q, FunctionId f, const JetVar& solve_for);

} // namespace jetsym
