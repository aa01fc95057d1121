#include "support.hpp"

#include <jetsym/invariance.hpp>
#include <jetsym/suites.hpp>

#include <doctest.h>

using namespace testing;

namespace {

VectorField translation(BaseVar v)
{
    VectorField X;
    X.name = "d" + index_label(v);
    X.xi[v] = Expr(1);
    return X;
}

const VectorField& named(const std::vector<VectorField>& fs, const std::string& n)
{
    for (const auto& f : fs) {
        if (f.name == n) {
            return f;
        }
    }
    throw std::runtime_error("no operator " + n);
}

// |sum| / largest term at a point.
double term_relative(const Expr& e, const JetPoint& p)
{
    Complex total = 0.0;
    double scale = 1.0;
    for (const auto& t : e.terms()) {
        const Complex v = eval(Expr::from_terms({t}), p);
        total += v;
        scale = std::max(scale, std::abs(v));
    }
    return std::abs(total) / scale;
}

} // namespace

TEST_CASE("absolute invariance")
{
    for (const auto& r : check_absolute(poincare_algebra(), U(), 2)) {
        CHECK(r.verdict == Verdict::absolute);
    }
    const auto r = check_absolute({translation(x0)}, X(x0), 1);
    REQUIRE(r.size() == 1);
    CHECK(r[0].verdict == Verdict::fails);
    CHECK(r[0].residuals.at(0) == Expr(1));
    for (const auto& g : check_absolute(galilei_algebra(), Ph() + Phc(), 2)) {
        CHECK(g.verdict == Verdict::absolute);
    }
}

TEST_CASE("relative factors")
{
    const auto lam = relative_factor(dilation(), N1(), 2);
    REQUIRE(lam);
    CHECK(lam->is_constant());
    CHECK_FALSE(lam->is_zero());
    CHECK(relative_factor(translation(x1), U(), 1)->is_zero());
    const auto gal = galilei_algebra();
    const auto& Jp = named(gal, "galilei.J");
    CHECK(*relative_factor(Jp, J(FunctionId::Phi), 0) == Expr(1));
    CHECK_FALSE(relative_factor(translation(x1), X(x1) + U(), 1));
    CHECK_THROWS_AS(relative_factor(Jp, Expr(), 0), DomainError);
}

TEST_CASE("system invariance")
{
    const auto ok = check_system_invariance(projective_A1(3), theorem_system(), 2);
    CHECK(ok.verdict == Verdict::conditional);
    for (const auto& r : ok.residuals) {
        CHECK(r.is_zero());
    }
    const auto bad = check_system_invariance(projective_A1(3), {Equation{wave_equation(), jet(FunctionId::u, {x3, x3}), {}}}, 2);
    CHECK(bad.verdict == Verdict::fails);
    CHECK_FALSE(bad.residuals.at(0).is_zero());
    const auto triv = check_system_invariance(translation(x2), theorem_system(), 2);
    CHECK(triv.verdict == Verdict::conditional);
}

TEST_CASE("conditional invariance")
{
    const auto A1 = projective_A1(3);
    const Equation G = condition_equation();
    const auto cis = conditional_invariants();
    for (const auto& ci : cis) {
        const auto r = check_conditional_invariant(A1, ci.u_form, G, 2, true, ci.name);
        CAPTURE(ci.name);
        CHECK((r.verdict == Verdict::conditional) == ci.expected_invariant);
    }
    const auto t1 = check_conditional_invariant(translation(x1), X(x1), Equation{U({x1}), jet(FunctionId::u, {x1}), {}}, 1);
    CHECK(t1.verdict == Verdict::fails);
    CHECK(t1.residuals.at(0) == Expr(1));
    // Order is raised to that of the condition.
    const auto low = check_conditional_invariant(A1, U(), G, 0);
    CHECK(low.order_used >= 1);
}

TEST_CASE("absolute implies conditional")
{
    // Admissible: the operator preserves the condition itself.
    const Equation G = condition_equation();
    int admissible = 0;
    for (const auto& Y : poincare_algebra()) {
        if (!check_system_invariance(Y, with_conjugates(G), 2).passed()) {
            continue;
        }
        ++admissible;
        for (const auto& e : poincare_basis()) {
            REQUIRE(check_absolute({Y}, e.expr, 2)[0].verdict == Verdict::absolute);
            CHECK(check_conditional_invariant(Y, e.expr, G, 2).passed());
        }
    }
    CHECK(admissible >= 5);
}

TEST_CASE("conditional residuals vanish numerically at ansatz points")
{
    const auto Xl = prolong(projective_A1(3), 2);
    for (const auto& ci : conditional_invariants()) {
        if (!ci.expected_invariant) {
            continue;
        }
        const Expr res = Xl.apply(ci.u_form);
        CAPTURE(ci.name);
        CHECK_FALSE(res.is_zero());
        double worst = 0;
        for (std::uint64_t s = 0; s < 100; ++s) {
            worst = std::max(worst, term_relative(res, ansatz_point(s)));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("q-conditional wrapper")
{
    const Equation q = q_condition(translation(x1), FunctionId::u, jet(FunctionId::u, {x1}));
    CHECK(q.expr == U({x1}));
    VectorField Y;
    Y.xi[x0] = Expr(1);
    Y.xi[x3] = Expr(1);
    Y.eta[FunctionId::u] = -(I() * P(Param::m) * U());
    CHECK(q_condition(Y, FunctionId::u, jet(FunctionId::u, {x0})).expr == condition());
}
