#include "support.hpp"

#include <jetsym/numeric.hpp>
#include <jetsym/reduction.hpp>

#include <doctest.h>

using namespace testing;

namespace {

Complex at(const JetPoint& p, const Expr& e) { return eval(e, p); }

} // namespace

TEST_CASE("random points")
{
    const auto a = random_point(5);
    const auto b = random_point(5);
    CHECK(a.values.size() == b.values.size());
    for (const auto& [k, v] : a.values) {
        CHECK(b.at(k) == v);
    }
    CHECK(random_point(6).at(Atom{jet(FunctionId::u)}) != a.at(Atom{jet(FunctionId::u)}));
    CHECK(a.at(Atom{jet(FunctionId::u_conj, {x1})}) == std::conj(a.at(Atom{jet(FunctionId::u, {x1})})));
    CHECK(a.at(Atom{jet(FunctionId::phi_conj, {tau, x2})}) == std::conj(a.at(Atom{jet(FunctionId::phi, {tau, x2})})));
    const Complex m = a.at(Atom{Param::m});
    CHECK(m.imag() == 0);
    CHECK(m.real() > 0);
    for (const auto& [k, v] : a.values) {
        if (std::holds_alternative<JetVar>(k) && std::get<JetVar>(k).function == FunctionId::u) {
            CHECK(std::abs(v) >= 0.5);
            CHECK(std::abs(v) <= 2.0);
        }
    }
    // Phi = exp(phi) jets agree with the chain rule.
    CHECK(std::abs(at(a, J(FunctionId::Phi, {x1})) - std::exp(at(a, Ph())) * at(a, Ph({x1}))) < 1e-12);
}

TEST_CASE("ansatz points satisfy the condition")
{
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto p = ansatz_point(s);
        CHECK(std::abs(at(p, condition())) <= 1e-12 * std::max(1.0, std::abs(at(p, U({x0})))));
        CHECK(relative_gap(at(p, box(FunctionId::u)), at(p, U() * N1())) <= 1e-9);
        const Expr im = I() * P(Param::m);
        const Expr lhs = U({x0, x0});
        const Expr rhs = U({x3, x3}) + Expr(2) * im * U({x3}) + im * im * U();
        CHECK(relative_gap(at(p, lhs), at(p, rhs)) <= 1e-12);
        CHECK(p.at(Atom{tau}) == p.at(Atom{x0}) - p.at(Atom{x3}));
    }
}

TEST_CASE("evaluation")
{
    const auto p = random_point(3);
    CHECK(eval(Expr(2), p) == Complex(2, 0));
    CHECK(eval(I(), p) == Complex(0, 1));
    const Complex Phi = p.at(Atom{jet(FunctionId::Phi)});
    CHECK(std::abs(eval(exp(Ph() + Phc()), p) - std::norm(Phi)) < 1e-12 * std::norm(Phi));
    const auto q = ansatz_point(4);
    const auto all = all_entries();
    const Expr I2 = find_entry(all, "cond.I2")->expr;
    CHECK(relative_gap(eval(I2, q), eval(N1(), q) / eval(conjugate(N1()), q)) <= 1e-9);
    // Half-integer powers on the principal branch.
    const Complex n1 = eval(N1(), p);
    CHECK(std::abs(eval(pow(N1(), Rational(1, 2)), p) - std::sqrt(n1)) < 1e-12 * std::abs(n1));
}

TEST_CASE("evaluation errors name the atom")
{
    JetPoint p;
    p.set(Atom{jet(FunctionId::u)}, 0.0);
    try {
        (void)eval(pow(U(), -1L), p);
        FAIL("no error");
    } catch (const EvaluationError& e) {
        CHECK(std::string(e.what()).find("u") != std::string::npos);
    }
    CHECK_THROWS_AS(eval(U({x1}), p), EvaluationError);
    p.set(Atom{jet(FunctionId::u, {x1})}, 1.0);
    CHECK_THROWS_AS(eval(pow(U() + U({x1}) - Expr(1), Rational(-1, 2)), p), EvaluationError);
}

TEST_CASE("jacobian rank")
{
    const auto p = random_point(8);
    CHECK(jacobian_rank({U(), Uc()}, p).rank == 2);
    const auto r = jacobian_rank({U(), Expr(2) * U()}, p);
    CHECK(r.rank == 1);
    CHECK(r.rows == 2);
    CHECK(r.cols == 1);
    CHECK_THROWS_AS(jacobian_rank({U()}, p, 0.0), std::invalid_argument);
    CHECK(jacobian_rank({U() * Uc(), U() * U({x1}), U(), Uc()}, p).rank == 3);
    CHECK(jacobian_rank({U() * Uc(), U(), Uc()}, p).rank == 2);
}

TEST_CASE("basis ranks are stable")
{
    std::vector<Expr> pb;
    for (const auto& e : poincare_basis()) {
        pb.push_back(e.expr);
    }
    std::vector<Expr> gb;
    for (const auto& e : galilei_basis()) {
        gb.push_back(e.expr);
    }
    for (std::uint64_t s : {1u, 2u, 3u}) {
        const auto p = random_point(s);
        for (double rel : {1e-7, 1e-8, 1e-9}) {
            const auto a = jacobian_rank(pb, p, rel);
            CHECK(a.rank == 24);
            CHECK(a.rank <= std::min(a.rows, a.cols));
            CHECK(jacobian_rank(gb, p, rel).rank == 16);
        }
    }
}
