#include <jetsym/prolong.hpp>

#include <mutex>
#include <stdexcept>

namespace jetsym {

namespace {

const Expr kZero;

} // namespace

const Expr& VectorField::xi_of(BaseVar v) const
{
    auto it = xi.find(v);
    return it == xi.end() ? kZero : it->second;
}

const Expr& VectorField::eta_of(FunctionId f) const
{
    auto it = eta.find(f);
    return it == eta.end() ? kZero : it->second;
}

void validate(const VectorField& X)
{
    auto check = [&X](const Expr& e) {
        for (const auto& j : jet_vars(e)) {
            if (j.order() > 0) {
                throw std::invalid_argument("field " + X.name + " has a derivative in a coefficient: " + to_string(j));
            }
        }
    };
    for (const auto& [_, e] : X.xi) {
        check(e);
    }
    for (const auto& [_, e] : X.eta) {
        check(e);
    }
}

VectorField with_log_chart(const VectorField& X, FunctionId from, FunctionId to)
{
    const FunctionId from_c = conjugate(from);
    const FunctionId to_c = conjugate(to);
    const Expr log_v = Expr::of(jet(to));
    const Expr log_c = Expr::of(jet(to_c));
    Bindings b;
    b.emplace(Atom{jet(from)}, exp(log_v));
    b.emplace(Atom{jet(from_c)}, exp(log_c));

    VectorField r;
    r.name = X.name;
    for (const auto& [v, e] : X.xi) {
        r.xi.emplace(v, substitute(e, b));
    }
    for (const auto& [f, e] : X.eta) {
        r.eta.emplace(f, e);
    }
    r.eta[to] = substitute(X.eta_of(from), b) * exp(-log_v);
    r.eta[to_c] = substitute(X.eta_of(from_c), b) * exp(-log_c);
    return r;
}

struct ProlongedField::Cache {
    std::recursive_mutex mutex;
    std::map<JetVar, Expr> coeffs;
};

ProlongedField::ProlongedField(VectorField base, int order)
    : base_(std::move(base)), order_(order), cache_(std::make_shared<Cache>())
{
    if (order < 0) {
        throw std::invalid_argument("prolongation order must be >= 0");
    }
    validate(base_);
}

Expr ProlongedField::coefficient(const JetVar& j) const
{
    if (j.order() > order_) {
        throw OrderError(to_string(j) + " exceeds prolongation order " + std::to_string(order_));
    }
    if (j.order() == 0) {
        return base_.eta_of(j.function);
    }
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->coeffs.find(j); it != cache_->coeffs.end()) {
        return it->second;
    }
    BaseVar i = BaseVar::x0;
    for (auto v : domain(j.function)) {
        if (j.index.count(v) > 0) {
            i = v;
            break;
        }
    }
    const MultiIndex parent = j.index.minus(make_index({i}));
    Expr c = total_derivative(coefficient(JetVar{j.function, parent}), i);
    for (auto v : domain(j.function)) {
        const Expr dxi = total_derivative(base_.xi_of(v), i);
        if (!dxi.is_zero()) {
            c -= dxi * Expr::of(JetVar{j.function, parent.plus(v)});
        }
    }
    return cache_->coeffs.emplace(j, std::move(c)).first->second;
}

Expr ProlongedField::apply(const Expr& F) const
{
    for (const auto& j : jet_vars(F)) {
        if (j.order() > order_) {
            throw OrderError(to_string(j) + " exceeds prolongation order " + std::to_string(order_) + " of " +
                             base_.name);
        }
    }
    return derive(F, [this](const Atom& a) -> Expr {
        if (const auto* b = std::get_if<BaseVar>(&a)) {
            return base_.xi_of(*b);
        }
        if (const auto* j = std::get_if<JetVar>(&a)) {
            return coefficient(*j);
        }
        return Expr();
    });
}

ProlongedField prolong(const VectorField& X, int l) { return ProlongedField(X, l); }

} // namespace jetsym
