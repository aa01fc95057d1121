// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "support.hpp"

#include <jetsym/invariance.hpp>
#include <jetsym/prolong.hpp>
#include <jetsym/reduction.hpp>
#include <jetsym/rewrite.hpp>
#include <jetsym/suites.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace testing;

namespace {

constexpr double kAnsatzTol = 1e-12;
constexpr double kIdentityTol = 1e-9;
constexpr double kRankRel = 1e-8;
constexpr int kAnsatzPoints = 100;
constexpr int kCases = 1000;

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok) {
                note << "failed: ";
            } else {
                note << "; ";
            }
            note << what;
            ok = false;
        }
    }
};

bool all_annihilate(const std::vector<VectorField>& gens, const Expr& e, int l)
{
    return std::all_of(gens.begin(), gens.end(), [&](const VectorField& g) {
        return check_absolute({g}, e, l)[0].verdict == Verdict::absolute;
    });
}

// Criterion 1.
void theorem1(Outcome& o)
{
    const auto A1 = projective_A1(3);
    const auto sys = theorem_system();
    const auto r = check_system_invariance(A1, sys, 2);
    o.require(r.verdict == Verdict::conditional, "A1 verdict " + to_string(r.verdict));
    o.require(r.residuals.size() == sys.size(), "residual count");
    for (const auto& res : r.residuals) {
        o.require(res.is_zero(), "nonzero residual");
    }
    const Expr eq = wave_equation();
    const auto ctrl = check_system_invariance(A1, {Equation{eq, jet(FunctionId::u, {x1, x1}), {}}}, 2);
    o.require(ctrl.verdict == Verdict::fails && !ctrl.residuals.at(0).is_zero(), "control without the condition passed");
    o.note << (o.ok ? "" : "; ") << sys.size() << " equations reduce to 0; without the condition the residual is nonzero"
           << "; wave equation solved for u_11 (u_33 is eliminated by the condition)";
}

// Criterion 2.
void galilei(Outcome& o)
{
    const auto gens = galilei_algebra();
    const auto basis = galilei_basis();
    o.require(basis.size() == 16, "basis size " + std::to_string(basis.size()));
    for (const auto& e : basis) {
        o.require(all_annihilate(gens, e.expr, 2), e.name);
    }
    o.note << (o.ok ? "" : "; ") << basis.size() << " entries x " << gens.size() << " generators";
}

// Criterion 3.
void extended(Outcome& o)
{
    auto gens = galilei_algebra();
    gens.push_back(dilation());
    gens.push_back(projective_A());
    const auto basis = extended_basis();
    o.require(!basis.empty(), "empty basis");
    for (const auto& e : basis) {
        o.require(all_annihilate(gens, e.expr, 2), e.name);
    }
    o.note << (o.ok ? "" : "; ") << basis.size() << " entries x " << gens.size() << " generators, n = 2";
}

// Criterion 4.
void poincare(Outcome& o)
{
    const auto gens = poincare_algebra();
    const auto basis = poincare_basis();
    o.require(gens.size() == 10, "generator count");
    std::vector<Expr> pe;
    for (const auto& e : basis) {
        o.require(all_annihilate(gens, e.expr, 2), e.name);
        pe.push_back(e.expr);
    }
    std::vector<Expr> ge;
    for (const auto& e : galilei_basis()) {
        ge.push_back(e.expr);
    }
    o.note << (o.ok ? "" : "; ") << basis.size() << " entries x 10 generators; ranks";
    for (std::uint64_t s : {1u, 2u, 3u}) {
        const auto p = random_point(s);
        const auto rp = jacobian_rank(pe, p, kRankRel);
        const auto rg = jacobian_rank(ge, p, kRankRel);
        o.require(rp.rank == 24, "poincare rank " + std::to_string(rp.rank) + " at seed " + std::to_string(s));
        o.require(rg.rank == 16, "galilei rank " + std::to_string(rg.rank) + " at seed " + std::to_string(s));
        o.note << " " << rp.rank << "/" << rg.rank;
    }
    o.note << " (poincare/galilei at seeds 1,2,3)";
}

// Criterion 5.
void dictionary_check(Outcome& o)
{
    int holding = 0;
    for (const auto& r : verify_dictionary()) {
        if (r.name.find(".printed") != std::string::npos) {
            continue;
        }
        o.require(r.expected, r.name + " marked as control");
        o.require(r.holds && r.residual.is_zero(), r.name);
        holding += r.holds ? 1 : 0;
    }
    o.require(holding == 11, "expected 11 identities, got " + std::to_string(holding));
    o.note << (o.ok ? "" : "; ") << holding << " identities hold exactly";
}

// Criterion 6.
void conditional(Outcome& o)
{
    const auto A1 = projective_A1(3);
    const Equation G = condition_equation();
    int checked = 0;
    for (const auto& ci : conditional_invariants()) {
        const auto r = check_conditional_invariant(A1, ci.u_form, G, 2);
        const bool inv = r.verdict == Verdict::conditional || r.verdict == Verdict::absolute;
        o.require(inv == ci.expected_invariant, ci.name + " verdict " + to_string(r.verdict));
        if (ci.name.find(".printed") == std::string::npos) {
            o.require(ci.expected_invariant && ci.expected_round_trip, ci.name + " marked as control");
            ++checked;
        }
    }
    for (const auto& r : conditional_invariant_pullback()) {
        o.require(r.ok(), r.name + " round trip");
    }
    o.require(checked == 4, "expected I1-I4");
    o.note << (o.ok ? "" : "; ") << checked
           << " invariants pass and round-trip; printed I1/I3 are not invariant, printed I4 does not round-trip";
}

// Criterion 7.
void ansatz(Outcome& o)
{
    o.require(ansatz_substitute(condition()).is_zero(), "condition does not vanish exactly");
    std::vector<Expr> consequences{condition()};
    for (auto v : domain(FunctionId::u)) {
        consequences.push_back(total_derivative(condition(), v));
    }
    std::vector<Identity> ids;
    for (const auto& id : dictionary()) {
        if (id.expected) {
            ids.push_back(id);
        }
    }
    for (const auto& ci : conditional_invariants()) {
        if (ci.expected_round_trip) {
            ids.push_back(Identity{ci.name, ci.u_form, ci.phi_form, true, ""});
        }
    }
    double worst_cond = 0;
    double worst_id = 0;
    for (int s = 0; s < kAnsatzPoints; ++s) {
        const auto p = ansatz_point(static_cast<std::uint64_t>(s));
        const double scale = std::max(1.0, std::abs(p.at(Atom{jet(FunctionId::u)})));
        for (const auto& c : consequences) {
            // Relative to the size of the u-jets involved.
            double ref = scale;
            for (const auto& t : c.terms()) {
                ref = std::max(ref, std::abs(eval(Expr::from_terms({t}), p)));
            }
            worst_cond = std::max(worst_cond, std::abs(eval(c, p)) / ref);
        }
        for (const auto& id : ids) {
            worst_id = std::max(worst_id, relative_gap(eval(id.lhs, p), eval(id.rhs, p)));
        }
    }
    o.require(worst_cond <= kAnsatzTol, "condition gap " + std::to_string(worst_cond));
    o.require(worst_id <= kIdentityTol, "identity gap " + std::to_string(worst_id));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d points, %zu consequences, %zu identities; worst gaps %.1e / %.1e",
                  kAnsatzPoints, consequences.size(), ids.size(), worst_cond, worst_id);
    o.note << (o.ok ? "" : "; ") << buf;
}

// Criterion 8.
void kernel(Outcome& o)
{
    int cases = 0;
    ExprGen g(101, Family::wave, 2);
    for (int k = 0; k < kCases; ++k, ++cases) {
        const Expr a = g();
        const Expr b = g();
        const Expr c = g();
        const Expr ab = a * b;
        o.require(normalize(ab) == ab, "idempotence");
        o.require(a + b == b + a && ab == b * a && (a + b) + c == a + (b + c), "commutativity/associativity");
        o.require(a * (b + c) == ab + a * c && (ab) * c == a * (b * c), "distributivity");
        o.require(conjugate(conjugate(a)) == a && conjugate(ab) == conjugate(a) * conjugate(b) &&
                      conjugate(a + b) == conjugate(a) + conjugate(b),
                  "conjugation");
        if (!o.ok) {
            break;
        }
    }

    std::vector<VectorField> fields = poincare_algebra();
    fields.push_back(projective_A1(3));
    std::vector<ProlongedField> pf;
    for (const auto& f : fields) {
        pf.push_back(prolong(f, 2));
    }
    ExprGen h(102, Family::wave, 2);
    const auto vars = domain(FunctionId::u);
    for (int k = 0; k < kCases; ++k) {
        const auto& X = pf[static_cast<std::size_t>(h.uniform(0, static_cast<int>(pf.size()) - 1))];
        const Expr F = h();
        const Expr G = h();
        o.require(X.apply(F * G) == X.apply(F) * G + F * X.apply(G), "Leibniz");
        const BaseVar i = vars[static_cast<std::size_t>(h.uniform(0, 3))];
        const BaseVar j = vars[static_cast<std::size_t>(h.uniform(0, 3))];
        o.require(total_derivative(total_derivative(F, i), j) == total_derivative(total_derivative(F, j), i),
                  "D_iD_j");
        if (!o.ok) {
            break;
        }
    }

    const RewriteSystem cond = build_system(with_conjugates(condition_equation()), 2);
    const RewriteSystem full = build_system(theorem_system(), 2);
    ExprGen r(103, Family::wave, 2);
    for (int k = 0; k < kCases; ++k) {
        const RewriteSystem& sys = (k % 2 == 0) ? cond : full;
        const Expr e = r() * r();
        const Expr red = reduce(e, sys);
        std::vector<std::size_t> order(sys.rules().size());
        for (std::size_t q = 0; q < order.size(); ++q) {
            order[q] = q;
        }
        std::shuffle(order.begin(), order.end(), r.rng());
        o.require(reduce(red, sys) == red, "reduce idempotence");
        o.require(reduce(e, sys, order) == red, "shuffle confluence");
        if (!o.ok) {
            break;
        }
    }
    o.note << (o.ok ? "" : "; ") << kCases << " cases each: ring, conjugation, idempotence, Leibniz, D_iD_j, reduce";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"1 theorem (exact)", theorem1},
        {"2 galilei basis (exact)", galilei},
        {"3 extended basis (exact)", extended},
        {"4 poincare basis (exact + numeric)", poincare},
        {"5 reduction dictionary (exact)", dictionary_check},
        {"6 conditional invariants (exact)", conditional},
        {"7 ansatz consistency (exact + numeric)", ansatz},
        {"8 kernel properties (randomized)", kernel},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.note << " exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  criterion %s  [%.1fs]  %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), secs, o.note.str().c_str());
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
