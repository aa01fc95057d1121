#include "support.hpp"

#include <jetsym/reduction.hpp>

#include <doctest.h>

using namespace testing;

TEST_CASE("ansatz substitution")
{
    CHECK(ansatz_substitute(condition()).is_zero());
    CHECK(ansatz_substitute(conjugate(condition())).is_zero());
    const Expr u = ansatz_expression();
    CHECK(ansatz_substitute(box(FunctionId::u)) == u * N1());
    const IndexSpace g = greek();
    CHECK(ansatz_substitute(R_k(gradient(FunctionId::u, g), {}, 1, g)) == u * u * M1());
    // phi-jets pass through unchanged.
    CHECK(ansatz_substitute(Ph({tau}) * X(x1)) == Ph({tau}) * X(x1));
    CHECK(ansatz_image(jet(FunctionId::u)) == u);
    CHECK(ansatz_image(jet(FunctionId::u_conj)) == conjugate(u));
}

TEST_CASE("condition consequences vanish through order 2")
{
    for (auto v : domain(FunctionId::u)) {
        const Expr d = total_derivative(condition(), v);
        CHECK(ansatz_substitute(d).is_zero());
        for (auto w : domain(FunctionId::u)) {
            CHECK(ansatz_substitute(total_derivative(d, w)).is_zero());
        }
    }
}

TEST_CASE("dictionary")
{
    const auto rs = verify_dictionary();
    int expected_true = 0;
    for (const auto& r : rs) {
        CAPTURE(r.name);
        CHECK(r.ok());
        if (r.expected) {
            CHECK(r.residual.is_zero());
            ++expected_true;
        }
    }
    // Eleven transcribed identities plus the self-consistent printed N2 pair.
    CHECK(expected_true == 12);
    CHECK(rs.size() == 14);
    CHECK(rs.front().name == "box=uN1");
    CHECK(rs.front().holds);
}

TEST_CASE("conditional invariant pullbacks")
{
    for (const auto& r : conditional_invariant_pullback()) {
        CAPTURE(r.name);
        CHECK(r.ok());
    }
}

TEST_CASE("substitution is a homomorphism and commutes with conjugation")
{
    ExprGen g(21, Family::wave, 1);
    for (int k = 0; k < 200; ++k) {
        const Expr a = g();
        const Expr b = g();
        CHECK(ansatz_substitute(a * b) == ansatz_substitute(a) * ansatz_substitute(b));
        CHECK(ansatz_substitute(a + b) == ansatz_substitute(a) + ansatz_substitute(b));
        CHECK(ansatz_substitute(conjugate(a)) == conjugate(ansatz_substitute(a)));
    }
}

TEST_CASE("chain rule along shared coordinates")
{
    ExprGen g(22, Family::wave, 1);
    for (int k = 0; k < 200; ++k) {
        const Expr e = g();
        for (auto v : {x1, x2}) {
            CHECK(ansatz_substitute(total_derivative(e, v)) == total_derivative(ansatz_substitute(e), v));
        }
    }
}
