#pragma once

#include <jetsym/expr.hpp>

#include <map>
#include <memory>
#include <string>

namespace jetsym {

/// X = xi^i d/dx_i + eta^r d/du^r with coefficients in (x, u) only.
struct VectorField {
    std::string name;
    std::map<BaseVar, Expr> xi;
    std::map<FunctionId, Expr> eta;

    const Expr& xi_of(BaseVar v) const;
    const Expr& eta_of(FunctionId f) const;
};

/// Throws std::invalid_argument if a coefficient contains a derivative jet.
void validate(const VectorField& X);

/// Adds components for the logarithmic chart to = log(from) (and for the
/// conjugate pair): eta^to = eta^from(from -> exp(to)) * exp(-to). Existing
/// xi and eta entries are rewritten in the same way.
VectorField with_log_chart(const VectorField& X, FunctionId from, FunctionId to);

/// Order-l prolongation; coefficients are computed on demand and memoized.
/// Copies share the cache, which is guarded by a mutex.
class ProlongedField {
public:
    ProlongedField(VectorField base, int order);

    const VectorField& base() const { return base_; }
    int order() const { return order_; }

    /// Coefficient of d/du^r_J. Throws OrderError above order().
    Expr coefficient(const JetVar& j) const;

    /// Sum xi^i dF/dx_i + sum coeff(u^r_J) dF/du^r_J.
    Expr apply(const Expr& F) const;

private:
    struct Cache;
    VectorField base_;
    int order_;
    std::shared_ptr<Cache> cache_;
};

ProlongedField prolong(const VectorField& X, int l);
inline Expr apply(const ProlongedField& Xl, const Expr& F) { return Xl.apply(F); }

} // namespace jetsym
