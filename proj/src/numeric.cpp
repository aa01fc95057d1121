#include <jetsym/numeric.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <span>
#include <stdexcept>

namespace jetsym {

namespace {

using enum BaseVar;

constexpr double kNearZero = 1e-12;

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double magnitude() { return std::uniform_real_distribution<double>(0.5, 2.0)(rng_); }
    double real_value() { return std::bernoulli_distribution(0.5)(rng_) ? magnitude() : -magnitude(); }
    Complex value()
    {
        const double r = magnitude();
        const double t = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng_);
        return std::polar(r, t);
    }

private:
    std::mt19937_64 rng_;
};

void indices_up_to(std::span<const BaseVar> vars, int order, std::vector<MultiIndex>& out)
{
    std::vector<MultiIndex> layer{MultiIndex{}};
    out.push_back(MultiIndex{});
    for (int k = 1; k <= order; ++k) {
        std::set<MultiIndex> next;
        for (const auto& m : layer) {
            for (auto v : vars) {
                next.insert(m.plus(v));
            }
        }
        layer.assign(next.begin(), next.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
}

void set_conjugate_pair(JetPoint& p, FunctionId f, const MultiIndex& idx, Complex v)
{
    p.set(Atom{JetVar{f, idx}}, v);
    p.set(Atom{JetVar{conjugate(f), idx}}, std::conj(v));
}

void fill_params(JetPoint& p, Sampler& s, double n)
{
    p.set(Atom{Param::m}, s.magnitude());
    p.set(Atom{Param::lambda}, s.magnitude());
    p.set(Atom{Param::n}, n);
}

// Random phi-jets up to order 2 plus the matching Phi = exp(phi) jets.
void fill_phi(JetPoint& p, Sampler& s)
{
    std::vector<MultiIndex> idx;
    indices_up_to(domain(FunctionId::phi), 2, idx);
    for (const auto& m : idx) {
        set_conjugate_pair(p, FunctionId::phi, m, s.value());
    }
    auto phi = [&p](std::initializer_list<BaseVar> vs) { return p.at(Atom{jet(FunctionId::phi, vs)}); };
    const Complex Phi = std::exp(phi({}));
    set_conjugate_pair(p, FunctionId::Phi, MultiIndex{}, Phi);
    const auto d = domain(FunctionId::phi);
    for (auto a : d) {
        set_conjugate_pair(p, FunctionId::Phi, make_index({a}), Phi * phi({a}));
        for (auto b : d) {
            set_conjugate_pair(p, FunctionId::Phi, make_index({a, b}), Phi * (phi({a, b}) + phi({a}) * phi({b})));
        }
    }
}

Complex ipow(Complex b, std::int64_t k)
{
    if (k < 0) {
        return 1.0 / ipow(b, -k);
    }
    Complex r = 1.0;
    while (k > 0) {
        if (k & 1) {
            r *= b;
        }
        b *= b;
        k >>= 1;
    }
    return r;
}

std::string atom_label(const Atom& a)
{
    if (const auto* b = std::get_if<BaseVar>(&a)) {
        return name(*b);
    }
    if (const auto* p = std::get_if<Param>(&a)) {
        return name(*p);
    }
    if (const auto* j = std::get_if<JetVar>(&a)) {
        return to_string(*j);
    }
    return std::holds_alternative<ExpAtom>(a) ? "exp(...)" : "power base";
}

Complex eval_cached(const Expr& e, const JetPoint& p, std::map<const Expr*, Complex>& cache)
{
    Complex total = 0.0;
    for (const auto& t : e.terms()) {
        Complex v = t.coeff.to_complex();
        for (const auto& f : t.monomial) {
            if (const auto* ea = std::get_if<ExpAtom>(&f.atom)) {
                auto it = cache.find(ea->arg.get());
                if (it == cache.end()) {
                    it = cache.emplace(ea->arg.get(), std::exp(eval_cached(*ea->arg, p, cache))).first;
                }
                v *= it->second;
                continue;
            }
            Complex base;
            if (const auto* pa = std::get_if<PowAtom>(&f.atom)) {
                auto it = cache.find(pa->base.get());
                if (it == cache.end()) {
                    it = cache.emplace(pa->base.get(), eval_cached(*pa->base, p, cache)).first;
                }
                base = it->second;
                if (std::abs(base) < kNearZero) {
                    throw EvaluationError("power base is numerically zero");
                }
            } else {
                base = p.at(f.atom);
                if (f.exponent.sign() < 0 && std::abs(base) < kNearZero) {
                    throw EvaluationError("division by near-zero value of " + atom_label(f.atom));
                }
            }
            if (f.exponent.is_integer()) {
                v *= ipow(base, f.exponent.num());
            } else {
                v *= std::pow(base, static_cast<double>(f.exponent.num()) / static_cast<double>(f.exponent.den()));
            }
        }
        total += v;
    }
    return total;
}

} // namespace

Complex JetPoint::at(const Atom& a) const
{
    auto it = values.find(a);
    if (it == values.end()) {
        throw EvaluationError("no value assigned to " + atom_label(a));
    }
    return it->second;
}

JetPoint random_point(std::uint64_t seed, double n)
{
    Sampler s(seed);
    JetPoint p;
    p.seed = seed;
    p.provenance = Provenance::free;
    for (auto v : {x0, x1, x2, x3, tau}) {
        p.set(Atom{v}, s.real_value());
    }
    fill_params(p, s, n);
    std::vector<MultiIndex> idx;
    indices_up_to(domain(FunctionId::u), 2, idx);
    for (const auto& m : idx) {
        set_conjugate_pair(p, FunctionId::u, m, s.value());
    }
    fill_phi(p, s);
    return p;
}

JetPoint ansatz_point(std::uint64_t seed, double n)
{
    Sampler s(seed);
    JetPoint p;
    p.seed = seed;
    p.provenance = Provenance::ansatz;
    for (auto v : {x0, x1, x2, x3}) {
        p.set(Atom{v}, s.real_value());
    }
    p.set(Atom{tau}, p.at(Atom{x0}) - p.at(Atom{x3}));
    fill_params(p, s, n);
    fill_phi(p, s);

    const Complex im = Complex(0.0, 1.0) * p.at(Atom{Param::m});
    auto phi = [&p](std::initializer_list<BaseVar> vs) { return p.at(Atom{jet(FunctionId::phi, vs)}); };
    // Original coordinate -> (sign, reduced coordinate) under tau = x0 - x3.
    auto reduced = [](BaseVar v) -> std::pair<double, BaseVar> {
        switch (v) {
        case x0: return {1.0, tau};
        case x3: return {-1.0, tau};
        default: return {1.0, v};
        }
    };
    const Complex u = std::exp(-0.5 * im * (p.at(Atom{x0}) + p.at(Atom{x3})) + phi({}));
    set_conjugate_pair(p, FunctionId::u, MultiIndex{}, u);
    const auto d = domain(FunctionId::u);
    std::map<BaseVar, Complex> psi;
    for (auto v : d) {
        const auto [c, r] = reduced(v);
        psi[v] = c * phi({r}) + ((v == x0 || v == x3) ? -0.5 * im : Complex(0.0));
        set_conjugate_pair(p, FunctionId::u, make_index({v}), u * psi[v]);
    }
    for (auto v : d) {
        for (auto w : d) {
            const auto [cv, rv] = reduced(v);
            const auto [cw, rw] = reduced(w);
            const Complex psi2 = cv * cw * phi({rv, rw});
            set_conjugate_pair(p, FunctionId::u, make_index({v, w}), u * (psi2 + psi[v] * psi[w]));
        }
    }
    return p;
}

Complex eval(const Expr& e, const JetPoint& p)
{
    std::map<const Expr*, Complex> cache;
    return eval_cached(e, p, cache);
}

double relative_gap(Complex a, Complex b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0}); }

RankReport jacobian_rank(const std::vector<Expr>& exprs, const JetPoint& p, double rel)
{
    if (!(rel > 0)) {
        throw std::invalid_argument("rank threshold must be positive");
    }
    std::set<JetVar> cols;
    for (const auto& e : exprs) {
        for (const auto& j : jet_vars(e)) {
            cols.insert(j);
        }
    }
    const std::vector<JetVar> atoms(cols.begin(), cols.end());
    RankReport rep;
    rep.rows = exprs.size();
    rep.cols = atoms.size();
    rep.seed = p.seed;
    std::vector<std::vector<Complex>> a(rep.rows, std::vector<Complex>(rep.cols));
    for (std::size_t i = 0; i < rep.rows; ++i) {
        for (std::size_t j = 0; j < rep.cols; ++j) {
            a[i][j] = eval(partial(exprs[i], Atom{atoms[j]}), p);
        }
    }
    const std::size_t steps = std::min(rep.rows, rep.cols);
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t pr = k;
        std::size_t pc = k;
        double best = -1;
        for (std::size_t i = k; i < rep.rows; ++i) {
            for (std::size_t j = k; j < rep.cols; ++j) {
                if (std::abs(a[i][j]) > best) {
                    best = std::abs(a[i][j]);
                    pr = i;
                    pc = j;
                }
            }
        }
        std::swap(a[k], a[pr]);
        for (auto& row : a) {
            std::swap(row[k], row[pc]);
        }
        rep.pivots.push_back(best);
        if (best == 0) {
            break;
        }
        for (std::size_t i = k + 1; i < rep.rows; ++i) {
            const Complex f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < rep.cols; ++j) {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    const double largest = rep.pivots.empty() ? 0.0 : rep.pivots.front();
    rep.threshold = largest * rel * static_cast<double>(std::max(rep.rows, rep.cols));
    for (double piv : rep.pivots) {
        if (piv > rep.threshold) {
            ++rep.rank;
        } else {
            break;
        }
    }
    return rep;
}

} // namespace jetsym
