#pragma once

#include <jetsym/expr.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace jetsym {

using Complex = std::complex<double>;

enum class Provenance { free, ansatz };

/// Values for base variables, parameters and jets. Conjugate jets hold the
/// complex conjugate of their partner; x, tau, m, lambda, n are real.
struct JetPoint {
    std::map<Atom, Complex, AtomLess> values;
    std::uint64_t seed = 0;
    Provenance provenance = Provenance::free;

    void set(const Atom& a, Complex v) { values.insert_or_assign(a, v); }
    Complex at(const Atom& a) const;
};

/// Random u, u*, phi, phi*, Phi, Phi* jets up to order 2 (Phi = exp(phi)),
/// magnitudes in [0.5, 2] with random phases. Deterministic per seed.
JetPoint random_point(std::uint64_t seed, double n = 3.0);

/// Random phi-jets and coordinates; u-jets from the ansatz
/// u = exp(-(im/2)(x0+x3) + phi(x0-x3, x1, x2)), so the condition and its
/// consequences hold to rounding.
JetPoint ansatz_point(std::uint64_t seed, double n = 3.0);

/// Principal branch for rational powers. Throws EvaluationError when a
/// denominator or power base is below 1e-12 in magnitude.
Complex eval(const Expr& e, const JetPoint& p);

/// |a - b| / max(|a|, |b|, 1).
double relative_gap(Complex a, Complex b);

struct RankReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    double threshold = 0;
    std::uint64_t seed = 0;
    std::vector<double> pivots;
};

/// Rank of d(expr_i)/d(jet_j) over all jets present, by complete-pivot
/// elimination; threshold = largest pivot * rel * max(rows, cols).
RankReport jacobian_rank(const std::vector<Expr>& exprs, const JetPoint& p, double rel = 1e-8);

} // namespace jetsym
