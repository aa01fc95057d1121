#include <jetsym/rewrite.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jetsym {

namespace {

bool is_monomial(const Expr& e) { return e.size() == 1; }

void check_order(const Expr& e, const RewriteSystem& sys)
{
    for (const auto& j : jet_vars(e)) {
        if (j.order() > sys.max_order() && sys.rewritable(j) && sys.find(j) == nullptr) {
            throw OrderError(to_string(j) + " is above the rewrite system's order " + std::to_string(sys.max_order()) +
                             "; rebuild it with a higher max_order");
        }
    }
}

Bindings all_bindings(const std::vector<SolvedRule>& rules, std::size_t skip = SIZE_MAX)
{
    Bindings b;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (i != skip) {
            b.emplace(Atom{rules[i].lhs}, rules[i].rhs);
        }
    }
    return b;
}

bool mentions_lhs(const Expr& e, const std::vector<SolvedRule>& rules)
{
    const auto js = jet_vars(e);
    return std::any_of(rules.begin(), rules.end(), [&js](const SolvedRule& r) { return js.count(r.lhs) > 0; });
}

// Substitutes rules into each other's right-hand sides until none mentions a lhs.
void inter_reduce(std::vector<SolvedRule>& rules)
{
    const std::size_t limit = rules.size() + 8;
    for (std::size_t pass = 0; pass <= limit; ++pass) {
        bool changed = false;
        for (std::size_t i = 0; i < rules.size(); ++i) {
            const auto js = jet_vars(rules[i].rhs);
            if (js.count(rules[i].lhs)) {
                throw CycleError("rule for " + to_string(rules[i].lhs) + " depends on itself");
            }
            bool hit = false;
            for (std::size_t k = 0; k < rules.size() && !hit; ++k) {
                hit = k != i && js.count(rules[k].lhs) > 0;
            }
            if (hit) {
                rules[i].rhs = substitute(rules[i].rhs, all_bindings(rules, i));
                changed = true;
            }
        }
        if (!changed) {
            return;
        }
    }
    for (const auto& r : rules) {
        if (jet_vars(r.rhs).count(r.lhs)) {
            throw CycleError("rule for " + to_string(r.lhs) + " depends on itself");
        }
    }
    throw CycleError("rewrite rules do not inter-reduce");
}

} // namespace

bool RulePattern::matches(const JetVar& j) const
{
    if (j.function != base.function || !j.index.contains(base.index)) {
        return false;
    }
    const MultiIndex k = j.index.minus(base.index);
    for (std::size_t v = 0; v < kBaseVarCount; ++v) {
        if (k.counts()[v] > 0 && std::find(directions.begin(), directions.end(), static_cast<BaseVar>(v)) == directions.end()) {
            return false;
        }
    }
    return true;
}

const SolvedRule* RewriteSystem::find(const JetVar& lhs) const
{
    for (const auto& r : rules_) {
        if (r.lhs == lhs) {
            return &r;
        }
    }
    return nullptr;
}

bool RewriteSystem::rewritable(const JetVar& j) const
{
    return std::any_of(patterns_.begin(), patterns_.end(), [&j](const RulePattern& p) { return p.matches(j); });
}

RewriteSystem consequences(const Expr& constraint, const JetVar& solve_for, int max_order,
                           std::vector<BaseVar> directions)
{
    if (directions.empty()) {
        const auto d = domain(solve_for.function);
        directions.assign(d.begin(), d.end());
    }
    for (auto v : directions) {
        if (!in_domain(solve_for.function, v)) {
            throw std::invalid_argument(name(solve_for.function) + " does not depend on " + name(v));
        }
    }
    RewriteSystem sys;
    sys.max_order_ = max_order;
    sys.patterns_.push_back(RulePattern{solve_for, directions});

    // Breadth-first over K so each D_K c is one derivative of a known one.
    std::map<MultiIndex, Expr> derived;
    derived.emplace(MultiIndex{}, constraint);
    std::vector<MultiIndex> frontier{MultiIndex{}};
    while (!frontier.empty()) {
        std::vector<MultiIndex> next;
        for (const auto& k : frontier) {
            const Expr& dk = derived.at(k);
            const JetVar lhs{solve_for.function, solve_for.index.plus(k)};
            const Expr coef = partial(dk, Atom{lhs});
            if (coef.is_zero() || depends_on(coef, Atom{lhs}) || !is_monomial(coef)) {
                throw NotSolvableError("cannot solve for " + to_string(lhs) + ": coefficient is not an invertible monomial");
            }
            const Expr rest = dk - coef * Expr::of(lhs);
            sys.rules_.push_back(SolvedRule{lhs, -(rest * pow(coef, -1L))});
            if (lhs.order() < max_order) {
                for (auto v : directions) {
                    MultiIndex kv = k.plus(v);
                    if (!derived.count(kv)) {
                        derived.emplace(kv, total_derivative(dk, v));
                        next.push_back(kv);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    inter_reduce(sys.rules_);
    return sys;
}

Expr reduce(const Expr& e, const RewriteSystem& sys)
{
    check_order(e, sys);
    if (sys.empty()) {
        return e;
    }
    const Bindings b = all_bindings(sys.rules());
    Expr r = e;
    for (std::size_t pass = 0; pass <= sys.rules().size() + 1; ++pass) {
        if (!mentions_lhs(r, sys.rules())) {
            return r;
        }
        r = substitute(r, b);
    }
    throw CycleError("reduction did not reach a fixpoint");
}

Expr reduce(const Expr& e, const RewriteSystem& sys, const std::vector<std::size_t>& rule_order)
{
    check_order(e, sys);
    Expr r = e;
    const std::size_t limit = (sys.rules().size() + 2) * (sys.rules().size() + 2);
    for (std::size_t pass = 0; pass < limit; ++pass) {
        if (!mentions_lhs(r, sys.rules())) {
            return r;
        }
        for (auto idx : rule_order) {
            const SolvedRule& rule = sys.rules().at(idx);
            if (jet_vars(r).count(rule.lhs)) {
                Bindings one;
                one.emplace(Atom{rule.lhs}, rule.rhs);
                r = substitute(r, one);
            }
        }
    }
    throw CycleError("reduction did not reach a fixpoint");
}

RewriteSystem merge(const RewriteSystem& a, const RewriteSystem& b)
{
    RewriteSystem r;
    r.max_order_ = std::min(a.max_order_, b.max_order_);
    r.rules_ = a.rules_;
    r.patterns_ = a.patterns_;
    std::vector<SolvedRule> duplicates;
    for (const auto& rule : b.rules_) {
        if (r.find(rule.lhs) != nullptr) {
            duplicates.push_back(rule);
        } else {
            r.rules_.push_back(rule);
        }
    }
    for (const auto& p : b.patterns_) {
        const bool known = std::any_of(r.patterns_.begin(), r.patterns_.end(), [&p](const RulePattern& q) {
            return q.base == p.base && q.directions == p.directions;
        });
        if (!known) {
            r.patterns_.push_back(p);
        }
    }
    inter_reduce(r.rules_);
    for (const auto& d : duplicates) {
        const Expr other = reduce(d.rhs, r);
        if (!is_zero(other - r.find(d.lhs)->rhs)) {
            throw InconsistentSystemError("conflicting rules for " + to_string(d.lhs));
        }
    }
    return r;
}

} // namespace jetsym
