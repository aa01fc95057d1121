#pragma once

#include <jetsym/expr.hpp>

#include <climits>
#include <vector>

namespace jetsym {

struct SolvedRule {
    JetVar lhs;
    Expr rhs;
};

/// Jets u_{J0+K} with K built from `directions` only are rewritable by a
/// system generated from a constraint solved for u_{J0}.
struct RulePattern {
    JetVar base;
    std::vector<BaseVar> directions;

    bool matches(const JetVar& j) const;
};

/// Inter-reduced solved-form rules, closed under total derivatives up to
/// max_order within its patterns.
class RewriteSystem {
public:
    RewriteSystem() = default;

    const std::vector<SolvedRule>& rules() const { return rules_; }
    const std::vector<RulePattern>& patterns() const { return patterns_; }
    /// INT_MAX for the empty system.
    int max_order() const { return max_order_; }
    bool empty() const { return rules_.empty(); }

    const SolvedRule* find(const JetVar& lhs) const;
    bool rewritable(const JetVar& j) const;

private:
    friend RewriteSystem consequences(const Expr&, const JetVar&, int, std::vector<BaseVar>);
    friend RewriteSystem merge(const RewriteSystem&, const RewriteSystem&);

    std::vector<SolvedRule> rules_;
    std::vector<RulePattern> patterns_;
    int max_order_ = INT_MAX;
};

/// Solves `constraint` for `solve_for` and adds every total-derivative
/// consequence D_K along `directions` (default: the function's domain)
/// with order(solve_for) + |K| <= max_order.
RewriteSystem consequences(const Expr& constraint, const JetVar& solve_for, int max_order,
                           std::vector<BaseVar> directions = {});

/// Normal form modulo sys. Throws OrderError when e has a rewritable jet
/// above sys.max_order().
Expr reduce(const Expr& e, const RewriteSystem& sys);
/// Same normal form, applying one rule at a time in the given order of
/// rule indices (used for confluence tests).
Expr reduce(const Expr& e, const RewriteSystem& sys, const std::vector<std::size_t>& rule_order);

/// Inter-reduced union. Rules for the same jet must agree modulo the union.
RewriteSystem merge(const RewriteSystem& a, const RewriteSystem& b);

} // namespace jetsym
