// Randomized kernel properties, 1000 cases each.
#include "support.hpp"

#include <jetsym/prolong.hpp>
#include <jetsym/rewrite.hpp>
#include <jetsym/suites.hpp>

#include <doctest.h>

#include <algorithm>

using namespace testing;

namespace {

constexpr int kCases = 1000;

std::vector<VectorField> wave_fields()
{
    auto f = poincare_algebra();
    f.push_back(projective_A1(3));
    f.push_back(projective_A1(3, XSquare::lorentz));
    return f;
}

std::vector<VectorField> reduced_fields()
{
    auto f = galilei_algebra();
    f.push_back(dilation());
    f.push_back(projective_A());
    return f;
}

} // namespace

TEST_CASE("normalization is idempotent")
{
    ExprGen g(1);
    for (int k = 0; k < kCases; ++k) {
        const Expr e = g() * g() + g();
        REQUIRE(normalize(e) == e);
        REQUIRE(normalize(normalize(e)) == normalize(e));
    }
}

TEST_CASE("ring laws")
{
    ExprGen g(2);
    for (int k = 0; k < kCases; ++k) {
        const Expr a = g();
        const Expr b = g();
        const Expr c = g();
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        REQUIRE(a * Expr(1) == a);
    }
}

TEST_CASE("conjugation is an involutive ring homomorphism")
{
    ExprGen g(3);
    for (int k = 0; k < kCases; ++k) {
        const Expr a = g();
        const Expr b = g();
        REQUIRE(conjugate(conjugate(a)) == a);
        REQUIRE(conjugate(a * b) == conjugate(a) * conjugate(b));
        REQUIRE(conjugate(a + b) == conjugate(a) + conjugate(b));
    }
}

TEST_CASE("total derivatives commute")
{
    for (auto fam : {Family::wave, Family::reduced}) {
        ExprGen g(4, fam);
        const auto vars = domain(fam == Family::wave ? FunctionId::u : FunctionId::phi);
        const int nv = static_cast<int>(vars.size());
        for (int k = 0; k < kCases / 2; ++k) {
            const Expr e = g() * g();
            const BaseVar i = vars[static_cast<std::size_t>(g.uniform(0, nv - 1))];
            const BaseVar j = vars[static_cast<std::size_t>(g.uniform(0, nv - 1))];
            REQUIRE(total_derivative(total_derivative(e, i), j) == total_derivative(total_derivative(e, j), i));
        }
    }
}

TEST_CASE("total and partial derivatives agree without jets")
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < kCases; ++k) {
        Expr e;
        for (int t = 0; t < 3; ++t) {
            e += Expr(static_cast<long>(rng() % 5) - 2) * pow(X(x1), static_cast<long>(rng() % 3)) *
                 pow(X(x0), static_cast<long>(rng() % 3)) * pow(X(tau), static_cast<long>(rng() % 2));
        }
        for (auto v : {x0, x1, tau}) {
            REQUIRE(total_derivative(e, v) == partial(e, Atom{v}));
        }
    }
}

TEST_CASE("prolonged fields are derivations")
{
    for (auto fam : {Family::wave, Family::reduced}) {
        const auto fields = fam == Family::wave ? wave_fields() : reduced_fields();
        std::vector<ProlongedField> pf;
        for (const auto& f : fields) {
            pf.push_back(prolong(f, 2));
        }
        ExprGen g(6, fam, 2);
        for (int k = 0; k < kCases / 2; ++k) {
            const auto& X = pf[static_cast<std::size_t>(g.uniform(0, static_cast<int>(pf.size()) - 1))];
            const Expr F = g();
            const Expr G = g();
            const Expr c = g.term();
            REQUIRE(X.apply(F * G) == X.apply(F) * G + F * X.apply(G));
            REQUIRE(X.apply(F + c * G) == X.apply(F) + c * X.apply(G) + X.apply(c) * G);
        }
    }
}

TEST_CASE("prolongation consistency")
{
    for (auto fam : {Family::wave, Family::reduced}) {
        const auto fields = fam == Family::wave ? wave_fields() : reduced_fields();
        const auto vars = domain(fam == Family::wave ? FunctionId::u : FunctionId::phi);
        std::vector<ProlongedField> p1;
        std::vector<ProlongedField> p2;
        for (const auto& f : fields) {
            p1.push_back(prolong(f, 1));
            p2.push_back(prolong(f, 2));
        }
        ExprGen g(7, fam, 1);
        for (int k = 0; k < kCases / 2; ++k) {
            const auto idx = static_cast<std::size_t>(g.uniform(0, static_cast<int>(fields.size()) - 1));
            const BaseVar i = vars[static_cast<std::size_t>(g.uniform(0, static_cast<int>(vars.size()) - 1))];
            const Expr F = g();
            Expr rhs = total_derivative(p1[idx].apply(F), i);
            for (auto j : vars) {
                rhs -= total_derivative(fields[idx].xi_of(j), i) * total_derivative(F, j);
            }
            REQUIRE(p2[idx].apply(total_derivative(F, i)) == rhs);
        }
    }
}

TEST_CASE("reduce is a projection and confluent on the acceptance systems")
{
    const RewriteSystem cond = build_system(with_conjugates(condition_equation()), 2);
    const RewriteSystem full = build_system(theorem_system(), 2);
    ExprGen g(8, Family::wave, 2);
    int shuffled = 0;
    for (int k = 0; k < kCases; ++k) {
        const RewriteSystem& sys = (k % 2 == 0) ? cond : full;
        const Expr e = g() * g();
        const Expr r = reduce(e, sys);
        REQUIRE(reduce(r, sys) == r);
        std::vector<std::size_t> order(sys.rules().size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::shuffle(order.begin(), order.end(), g.rng());
        REQUIRE(reduce(e, sys, order) == r);
        ++shuffled;
    }
    CHECK(shuffled == kCases);
}

TEST_CASE("verdicts are unchanged by constant scaling")
{
    const auto A1 = projective_A1(3);
    const Equation G = condition_equation();
    std::mt19937_64 rng(9);
    for (const auto& ci : conditional_invariants()) {
        const Gaussian c(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 5) - 2);
        const auto a = check_conditional_invariant(A1, ci.u_form, G, 2);
        const auto b = check_conditional_invariant(A1, Expr(c) * ci.u_form, G, 2);
        CHECK(a.verdict == b.verdict);
    }
    for (const auto& e : galilei_basis()) {
        const auto a = check_absolute(galilei_algebra(), e.expr, 2);
        const auto b = check_absolute(galilei_algebra(), Expr(Gaussian(3, -1)) * e.expr, 2);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].verdict == b[i].verdict);
        }
    }
}
