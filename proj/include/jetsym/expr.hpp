#pragma once

#include <jetsym/errors.hpp>
#include <jetsym/rational.hpp>
#include <jetsym/variables.hpp>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace jetsym {

class Expr;

/// exp(arg). Inside a monomial it always carries exponent 1; products of
/// exponentials are merged into a single atom.
struct ExpAtom {
    std::shared_ptr<const Expr> arg;
};

/// A multi-term (or non-monic) base raised to a rational power, e.g. N1^(-3/2).
/// The exponent lives in the enclosing Factor.
struct PowAtom {
    std::shared_ptr<const Expr> base;
};

using Atom = std::variant<BaseVar, Param, JetVar, ExpAtom, PowAtom>;

int compare(const Atom& a, const Atom& b);
bool is_simple(const Atom& a);

struct AtomLess {
    bool operator()(const Atom& a, const Atom& b) const { return compare(a, b) < 0; }
};

struct Factor {
    Atom atom;
    Rational exponent;
};

/// Factors sorted by atom, one factor per atom, no zero exponents.
using Monomial = std::vector<Factor>;

int compare(const Monomial& a, const Monomial& b);

struct Term {
    Gaussian coeff;
    Monomial monomial;
};

/// Canonical symbolic expression: a sorted sum of terms with nonzero
/// Gaussian-rational coefficients and pairwise distinct monomials.
/// Every constructor and operation returns a canonical value, so structural
/// equality is mathematical equality on the polynomial-with-exp fragment.
class Expr {
public:
    Expr() = default;
    Expr(long c);
    Expr(Gaussian c);

    /// Canonicalizes arbitrary terms: merges factors and exponentials,
    /// expands positive integer powers of compound bases, combines like terms.
    static Expr from_terms(std::vector<Term> terms);

    static Expr of(const Atom& a, Rational exponent = Rational(1));
    static Expr of(BaseVar v) { return of(Atom{v}); }
    static Expr of(Param p) { return of(Atom{p}); }
    static Expr of(const JetVar& j) { return of(Atom{j}); }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Gaussian> constant_value() const;
    /// The single atom this expression is, with exponent 1 and coefficient 1.
    std::optional<Atom> as_atom() const;

    Expr operator-() const;
    Expr& operator+=(const Expr& o);
    Expr& operator-=(const Expr& o);
    Expr& operator*=(const Expr& o);
    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);

    friend bool operator==(const Expr& a, const Expr& b);
    friend int compare(const Expr& a, const Expr& b);

private:
    friend struct ExprAccess;
    std::vector<Term> terms_;
};

inline Expr operator*(const Gaussian& c, const Expr& e) { return Expr(c) * e; }

inline Expr imag_unit() { return Expr(Gaussian::imaginary_unit()); }
inline Expr rational(long num, long den = 1) { return Expr(Gaussian(mpq_class(num, den))); }

/// Power with exact rational exponent. Rejects 0^0 and negative powers of zero.
Expr pow(const Expr& base, const Rational& exponent);
inline Expr pow(const Expr& base, long k) { return pow(base, Rational(k)); }
Expr exp(const Expr& arg);

/// Re-runs canonicalization; idempotent.
Expr normalize(const Expr& e);

/// Derivation driven by a rule for simple atoms (BaseVar, Param, JetVar);
/// exponentials and powers follow the chain rule.
using SimpleAtomDerivative = std::function<Expr(const Atom&)>;
Expr derive(const Expr& e, const SimpleAtomDerivative& rule);

/// Formal partial derivative with respect to a simple atom; jet coordinates
/// are independent.
Expr partial(const Expr& e, const Atom& v);
/// D_i e = de/dx_i + sum over jets of u_{J+i} de/du_J, restricted to the
/// functions that depend on x_i.
Expr total_derivative(const Expr& e, BaseVar v);
Expr total_derivative(const Expr& e, const MultiIndex& idx);

/// i -> -i and every function to its conjugate partner.
Expr conjugate(const Expr& e);

using Bindings = std::map<Atom, Expr, AtomLess>;
/// Simultaneous replacement of simple atoms. With closed_order >= 0, every
/// jet of a bound function with order <= closed_order must itself be bound.
Expr substitute(const Expr& e, const Bindings& bindings, int closed_order = -1);

/// Multiplies through by compound denominators until no PowAtom carries a
/// negative exponent. The result vanishes iff e does, assuming nonzero
/// denominators.
Expr clear_denominators(const Expr& e);
bool has_denominators(const Expr& e);
/// Exact zero test on the quotient fragment.
bool is_zero(const Expr& e);
inline bool equivalent(const Expr& a, const Expr& b) { return is_zero(a - b); }

std::set<JetVar> jet_vars(const Expr& e);
std::set<Atom, AtomLess> simple_atoms(const Expr& e);
/// Highest jet order present; -1 if none.
int jet_order(const Expr& e);
bool depends_on(const Expr& e, const Atom& a);

} // namespace jetsym
