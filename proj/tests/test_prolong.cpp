#include "support.hpp"

#include <jetsym/prolong.hpp>

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

} // namespace

TEST_CASE("translations prolong trivially")
{
    const auto T = prolong(translation(x1), 2);
    for (auto a : domain(FunctionId::u)) {
        CHECK(T.coefficient(jet(FunctionId::u, {a})).is_zero());
        for (auto b : domain(FunctionId::u)) {
            CHECK(T.coefficient(jet(FunctionId::u, {a, b})).is_zero());
        }
    }
    const auto D0 = prolong(translation(x0), 2);
    CHECK(D0.apply(condition()).is_zero());
    // Only explicit x0 dependence is seen; jets are not shifted.
    CHECK(D0.apply(X(x0) * U({x0}) + U({x3})) == U({x0}));
}

TEST_CASE("rotation J12 acts on first derivatives")
{
    VectorField R;
    R.name = "J12";
    R.xi[x2] = X(x1);
    R.xi[x1] = -X(x2);
    const auto R1 = prolong(R, 1);
    CHECK(R1.coefficient(jet(FunctionId::u, {x1})) == -U({x2}));
    CHECK(R1.coefficient(jet(FunctionId::u, {x2})) == U({x1}));
    CHECK(R1.coefficient(jet(FunctionId::u, {x3})).is_zero());
    CHECK(R1.apply(U({x1}) * U({x1}) + U({x2}) * U({x2})).is_zero());
}

TEST_CASE("catalog operators")
{
    const auto gal = galilei_algebra();
    const VectorField* G1 = nullptr;
    const VectorField* Jp = nullptr;
    for (const auto& f : gal) {
        if (f.name == "galilei.G1") G1 = &f;
        if (f.name == "galilei.J") Jp = &f;
    }
    REQUIRE(G1);
    REQUIRE(Jp);
    CHECK(prolong(*G1, 2).apply(M1()).is_zero());
    CHECK(prolong(*Jp, 0).apply(J(FunctionId::Phi)) == J(FunctionId::Phi));
    CHECK(prolong(*Jp, 0).apply(J(FunctionId::Phi_conj)) == -J(FunctionId::Phi_conj));
    // Logarithmic chart: phi is shifted by 1, phi* by -1.
    CHECK(prolong(*Jp, 0).apply(Ph()) == Expr(1));
    CHECK(prolong(*Jp, 0).apply(Phc()) == Expr(-1));

    // A1 on u: (i m x^2/2) u - ((n-1)/2)(x0-x3) u with spatial x^2 and n = 3.
    const Expr xsq = X(x1) * X(x1) + X(x2) * X(x2);
    const Expr phase = rational(1, 2) * I() * P(Param::m) * xsq;
    CHECK(prolong(projective_A1(3), 2).apply(U()) == (phase - (X(x0) - X(x3))) * U());
    CHECK(prolong(projective_A1(3, XSquare::spatial, +1), 2).apply(U()) == (phase + (X(x0) - X(x3))) * U());
    CHECK(prolong(projective_A1(3), 2).apply(Uc()) == (-phase - (X(x0) - X(x3))) * Uc());
}

TEST_CASE("order errors and validation")
{
    const auto X1 = prolong(translation(x1), 1);
    CHECK_THROWS_AS(X1.apply(U({x1, x1})), OrderError);
    CHECK_THROWS_AS(X1.coefficient(jet(FunctionId::u, {x1, x2})), OrderError);
    VectorField bad;
    bad.eta[FunctionId::u] = U({x1});
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("copies share memoized coefficients")
{
    const auto A = prolong(projective_A1(3), 2);
    const auto B = A;
    const JetVar j = jet(FunctionId::u, {x0, x3});
    CHECK(A.coefficient(j) == B.coefficient(j));
    // Same value as a fresh prolongation computed from scratch.
    CHECK(prolong(projective_A1(3), 2).coefficient(j) == A.coefficient(j));
}
