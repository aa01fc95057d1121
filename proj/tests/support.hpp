#pragma once

#include <jetsym/catalog.hpp>
#include <jetsym/expr.hpp>
#include <jetsym/numeric.hpp>

#include <random>
#include <vector>

namespace testing {

using namespace jetsym;
using enum BaseVar;

inline Expr J(FunctionId f, std::initializer_list<BaseVar> vs = {}) { return Expr::of(jet(f, vs)); }
inline Expr U(std::initializer_list<BaseVar> vs = {}) { return J(FunctionId::u, vs); }
inline Expr Uc(std::initializer_list<BaseVar> vs = {}) { return J(FunctionId::u_conj, vs); }
inline Expr Ph(std::initializer_list<BaseVar> vs = {}) { return J(FunctionId::phi, vs); }
inline Expr Phc(std::initializer_list<BaseVar> vs = {}) { return J(FunctionId::phi_conj, vs); }
inline Expr X(BaseVar v) { return Expr::of(v); }
inline Expr P(Param p) { return Expr::of(p); }
inline Expr I() { return imag_unit(); }

enum class Family { wave, reduced };

/// Small random polynomials in base variables, parameters and jets of order
/// <= max_jet_order, with Gaussian-integer coefficients; occasionally an
/// exponential factor.
class ExprGen {
public:
    explicit ExprGen(std::uint64_t seed, Family fam = Family::wave, int max_jet_order = 1)
        : rng_(seed)
    {
        const auto f = fam == Family::wave ? FunctionId::u : FunctionId::phi;
        const auto vars = domain(f);
        pool_.push_back(Atom{vars[0]});
        pool_.push_back(Atom{vars[1]});
        pool_.push_back(Atom{Param::m});
        for (auto g : {f, conjugate(f)}) {
            pool_.push_back(Atom{jet(g)});
            if (max_jet_order >= 1) {
                for (auto v : vars) {
                    pool_.push_back(Atom{JetVar{g, make_index({v})}});
                }
            }
            if (max_jet_order >= 2) {
                pool_.push_back(Atom{JetVar{g, make_index({vars[0], vars[1]})}});
                pool_.push_back(Atom{JetVar{g, make_index({vars[2], vars[2]})}});
            }
        }
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Expr term()
    {
        Gaussian c(uniform(-3, 3), uniform(-2, 2));
        if (c.is_zero()) {
            c = Gaussian(1);
        }
        Expr t(c);
        const int k = uniform(0, 3);
        for (int i = 0; i < k; ++i) {
            t *= Expr::of(pool_[static_cast<std::size_t>(uniform(0, static_cast<int>(pool_.size()) - 1))]);
        }
        return t;
    }

    Expr operator()()
    {
        Expr e;
        const int n = uniform(1, 4);
        for (int i = 0; i < n; ++i) {
            e += term();
        }
        if (uniform(0, 7) == 0) {
            e *= exp(term() - term());
        }
        return e;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::vector<Atom> pool_;
};

} // namespace testing
