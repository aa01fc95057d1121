#include <jetsym/invariance.hpp>

#include <algorithm>

namespace jetsym {

namespace {

Rational degree(const Monomial& m)
{
    Rational d;
    for (const auto& f : m) {
        d = d + f.exponent;
    }
    return d;
}

const Term& leading(const Expr& e)
{
    const Term* best = &e.terms().front();
    Rational best_deg = degree(best->monomial);
    for (const auto& t : e.terms()) {
        const Rational d = degree(t.monomial);
        if (d > best_deg || (d == best_deg && compare(t.monomial, best->monomial) > 0)) {
            best = &t;
            best_deg = d;
        }
    }
    return *best;
}

std::optional<Expr> laurent_divide(Expr r, const Expr& f, int max_steps)
{
    const Term& lf = leading(f);
    const Expr lf_inv = pow(Expr::from_terms({Term{Gaussian(1), lf.monomial}}), -1L);
    const Gaussian lf_c = lf.coeff.inverse();
    Expr q;
    for (int step = 0; step < max_steps; ++step) {
        if (r.is_zero()) {
            return q;
        }
        const Term& lr = leading(r);
        const Expr t = Expr::from_terms({Term{lr.coeff * lf_c, lr.monomial}}) * lf_inv;
        q += t;
        r -= t * f;
    }
    return std::nullopt;
}

bool zero_test(const Expr& e, bool& used_clearing)
{
    if (e.is_zero()) {
        return true;
    }
    if (has_denominators(e)) {
        used_clearing = true;
    }
    return is_zero(e);
}

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::absolute: return "absolute";
    case Verdict::relative: return "relative";
    case Verdict::conditional: return "conditional";
    case Verdict::fails: return "fails";
    }
    return "?";
}

std::vector<Equation> with_conjugates(const Equation& eq)
{
    Equation c{conjugate(eq.expr), JetVar{conjugate(eq.solve_for.function), eq.solve_for.index}, eq.directions};
    return {eq, c};
}

std::vector<InvarianceReport> check_absolute(const std::vector<VectorField>& generators, const Expr& F, int l,
                                             const std::string& subject)
{
    std::vector<InvarianceReport> out;
    for (const auto& X : generators) {
        InvarianceReport rep;
        rep.subject = subject;
        rep.op = X.name;
        rep.order_used = l;
        Expr res = prolong(X, l).apply(F);
        const bool zero = zero_test(res, rep.assumes_nonzero_denominators);
        rep.verdict = zero ? Verdict::absolute : Verdict::fails;
        rep.residuals.push_back(zero ? Expr() : std::move(res));
        out.push_back(std::move(rep));
    }
    return out;
}

std::optional<Expr> relative_factor(const VectorField& X, const Expr& F, int l)
{
    if (F.is_zero()) {
        throw DomainError("relative factor of the zero expression");
    }
    const Expr r = prolong(X, l).apply(F);
    if (is_zero(r)) {
        return Expr();
    }
    if (F.size() == 1) {
        return r * pow(F, -1L);
    }
    const int bound = static_cast<int>(4 * (r.size() + F.size()) + 16);
    auto q = laurent_divide(r, F, bound);
    if (q && is_zero(*q * F - r)) {
        return q;
    }
    return std::nullopt;
}

RewriteSystem build_system(const std::vector<Equation>& equations, int l)
{
    std::vector<const Equation*> order;
    for (const auto& e : equations) {
        order.push_back(&e);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const Equation* a, const Equation* b) { return jet_order(a->expr) < jet_order(b->expr); });
    RewriteSystem sys;
    for (const auto* eq : order) {
        const Expr reduced = reduce(eq->expr, sys);
        sys = merge(sys, consequences(reduced, eq->solve_for, l, eq->directions));
    }
    return sys;
}

InvarianceReport check_system_invariance(const VectorField& X, const std::vector<Equation>& equations, int l,
                                         const std::string& subject)
{
    InvarianceReport rep;
    rep.subject = subject;
    rep.op = X.name;
    rep.order_used = l;
    const RewriteSystem sys = build_system(equations, l);
    const ProlongedField Xl = prolong(X, l);
    bool all = true;
    for (const auto& eq : equations) {
        Expr res = reduce(Xl.apply(eq.expr), sys);
        const bool zero = zero_test(res, rep.assumes_nonzero_denominators);
        all = all && zero;
        rep.residuals.push_back(zero ? Expr() : std::move(res));
    }
    rep.verdict = all ? Verdict::conditional : Verdict::fails;
    return rep;
}

InvarianceReport check_conditional_invariant(const VectorField& X, const Expr& F, const Equation& G, int l,
                                             bool include_conjugate, const std::string& subject)
{
    InvarianceReport rep;
    rep.subject = subject;
    rep.op = X.name;
    const int l_max = std::max({l, jet_order(F), jet_order(G.expr)});
    rep.order_used = l_max;
    const std::vector<Equation> eqs = include_conjugate ? with_conjugates(G) : std::vector<Equation>{G};
    const RewriteSystem sys = build_system(eqs, l_max);
    const ProlongedField Xl = prolong(X, l_max);

    const Expr raw_f = Xl.apply(F);
    bool dummy = false;
    const bool f_absolute = zero_test(raw_f, dummy);
    bool all = true;
    Expr rf = f_absolute ? Expr() : reduce(raw_f, sys);
    const bool f_zero = f_absolute || zero_test(rf, rep.assumes_nonzero_denominators);
    all = f_zero;
    rep.residuals.push_back(f_zero ? Expr() : std::move(rf));
    for (const auto& eq : eqs) {
        Expr rg = reduce(Xl.apply(eq.expr), sys);
        const bool zero = zero_test(rg, rep.assumes_nonzero_denominators);
        all = all && zero;
        rep.residuals.push_back(zero ? Expr() : std::move(rg));
    }
    if (!all) {
        rep.verdict = Verdict::fails;
    } else {
        rep.verdict = f_absolute ? Verdict::absolute : Verdict::conditional;
    }
    if (f_absolute) {
        rep.assumes_nonzero_denominators = rep.assumes_nonzero_denominators || dummy;
    }
    return rep;
}

Equation q_condition(const VectorField& Q, FunctionId f, const JetVar& solve_for)
{
    Expr g = -Q.eta_of(f);
    for (auto v : domain(f)) {
        const Expr& xi = Q.xi_of(v);
        if (!xi.is_zero()) {
            g += xi * Expr::of(JetVar{f, make_index({v})});
        }
    }
    return Equation{g, solve_for, {}};
}

} // namespace jetsym
