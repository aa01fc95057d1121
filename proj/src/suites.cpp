#include <jetsym/suites.hpp>

#include <jetsym/numeric.hpp>
#include <jetsym/reduction.hpp>
#include <jetsym/syntax.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace jetsym {

namespace {

using enum BaseVar;
using json = nlohmann::ordered_json;

constexpr double kConditionTol = 1e-12;
constexpr std::size_t kResidualChars = 4000;

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

std::string residual_text(const Expr& e)
{
    std::string s = print(e);
    if (s.size() > kResidualChars) {
        s = s.substr(0, kResidualChars) + " ... [" + std::to_string(e.size()) + " terms, truncated]";
    }
    return s;
}

bool all_zero(const std::vector<Expr>& rs)
{
    return std::all_of(rs.begin(), rs.end(), [](const Expr& e) { return e.is_zero(); });
}

CheckResult from_report(const std::string& name, const InvarianceReport& r, bool expected)
{
    CheckResult c;
    c.name = name;
    c.kind = "exact";
    c.expected = expected;
    c.observed = r.passed();
    c.verdict = to_string(r.verdict);
    c.residuals = r.residuals;
    c.details.emplace_back("operator", r.op);
    c.details.emplace_back("order", std::to_string(r.order_used));
    if (r.assumes_nonzero_denominators) {
        c.details.emplace_back("assumes_nonzero_denominators", "true");
    }
    return c;
}

// Absolute invariance under every generator.
CheckResult basis_check(const std::string& name, const Expr& F, const std::vector<VectorField>& gens, bool expected)
{
    CheckResult c;
    c.name = name;
    c.kind = "exact";
    c.expected = expected;
    c.observed = true;
    for (const auto& r : check_absolute(gens, F, 2, name)) {
        const bool ok = r.verdict == Verdict::absolute;
        c.observed = c.observed && ok;
        c.details.emplace_back(r.op, to_string(r.verdict));
        if (!ok) {
            c.residuals.insert(c.residuals.end(), r.residuals.begin(), r.residuals.end());
        }
    }
    c.verdict = c.observed ? "absolute" : "fails";
    return c;
}

// |sum of terms| relative to the largest single term.
double term_relative(const Expr& e, const JetPoint& p)
{
    Complex total = 0.0;
    double scale = 1.0;
    for (const auto& t : e.terms()) {
        const Complex v = eval(Expr::from_terms({t}), p);
        total += v;
        scale = std::max(scale, std::abs(v));
    }
    return std::abs(total) / scale;
}

template <class Gap>
CheckResult numeric_check(const std::string& name, const SuiteOptions& opts, double tol, bool expected, Gap gap)
{
    CheckResult c;
    c.name = name;
    c.kind = "numeric";
    c.expected = expected;
    double worst = 0.0;
    std::string error;
    for (int k = 0; k < opts.trials; ++k) {
        const auto seed = opts.seed + static_cast<std::uint64_t>(k);
        try {
            worst = std::max(worst, gap(ansatz_point(seed, opts.settings.n_schrodinger)));
        } catch (const EvaluationError& e) {
            error = "seed " + std::to_string(seed) + ": " + e.what();
            break;
        }
    }
    c.observed = error.empty() && worst <= tol;
    c.verdict = c.observed ? "agrees" : "differs";
    c.details.emplace_back("trials", std::to_string(opts.trials));
    c.details.emplace_back("max_gap", sci(worst));
    c.details.emplace_back("tol", sci(tol));
    if (!error.empty()) {
        c.details.emplace_back("error", error);
    }
    return c;
}

CheckResult identity_numeric(const std::string& name, const Expr& lhs, const Expr& rhs, bool expected,
                             const SuiteOptions& opts)
{
    return numeric_check(name, opts, opts.tol, expected,
                         [&](const JetPoint& p) { return relative_gap(eval(lhs, p), eval(rhs, p)); });
}

SuiteReport theorem1(const SuiteOptions& opts)
{
    SuiteReport rep{"theorem1", {}};
    const int n = opts.settings.n_wave;
    const auto sys = theorem_system();
    auto run = [&](const std::string& name, const VectorField& X, const std::vector<Equation>& eqs, bool expected) {
        auto r = check_system_invariance(X, eqs, 2, name);
        CheckResult c = from_report(name, r, expected);
        c.observed = r.verdict == Verdict::conditional && all_zero(r.residuals);
        rep.checks.push_back(std::move(c));
    };
    run("theorem1.A1", projective_A1(n), sys, true);
    run("theorem1.A1.lorentz", projective_A1(n, XSquare::lorentz), sys, false);
    run("theorem1.A1.printed", projective_A1(n, XSquare::spatial, +1), sys, false);
    run("theorem1.no-condition", projective_A1(n),
        {Equation{wave_equation(), jet(FunctionId::u, {x3, x3}), {}}}, false);
    return rep;
}

SuiteReport galilei_suite(const SuiteOptions&)
{
    SuiteReport rep{"galilei-basis", {}};
    const auto gens = galilei_algebra();
    for (const auto& e : galilei_basis()) {
        rep.checks.push_back(basis_check(e.name, e.expr, gens, true));
    }
    rep.checks.push_back(basis_check("galilei.M1/galilei.G1.printed", M1(), {galilei_boost_massless(1)}, false));
    return rep;
}

std::vector<VectorField> extended_generators()
{
    auto gens = galilei_algebra();
    gens.push_back(dilation());
    gens.push_back(projective_A());
    return gens;
}

SuiteReport extended_suite(const SuiteOptions& opts)
{
    SuiteReport rep{"extended-basis", {}};
    const auto gens = extended_generators();
    for (const auto& e : extended_basis(opts.settings)) {
        rep.checks.push_back(basis_check(e.name, e.expr, gens, true));
    }
    const auto all = all_entries(opts.settings);
    for (const char* nm : {"extended.N1e.printed", "extended.N2/N1^2.printed"}) {
        rep.checks.push_back(basis_check(nm, find_entry(all, nm)->expr, gens, false));
    }
    return rep;
}

SuiteReport poincare_suite(const SuiteOptions&)
{
    SuiteReport rep{"poincare-basis", {}};
    const auto gens = poincare_algebra();
    for (const auto& e : poincare_basis()) {
        rep.checks.push_back(basis_check(e.name, e.expr, gens, true));
    }
    return rep;
}

SuiteReport dictionary_suite(const SuiteOptions& opts)
{
    SuiteReport rep{"dictionary", {}};
    const auto ids = dictionary(opts.settings);
    for (const auto& id : ids) {
        const auto r = check_identity(id);
        CheckResult c;
        c.name = "identity." + id.name;
        c.kind = "exact";
        c.expected = id.expected;
        c.observed = r.holds;
        c.verdict = r.holds ? "holds" : "differs";
        if (!r.holds) {
            c.residuals.push_back(r.residual);
        }
        if (!id.note.empty()) {
            c.details.emplace_back("note", id.note);
        }
        rep.checks.push_back(std::move(c));
    }

    CheckResult cond;
    cond.name = "ansatz.condition";
    cond.kind = "exact";
    const Expr sub = ansatz_substitute(condition());
    cond.observed = sub.is_zero();
    cond.verdict = cond.observed ? "holds" : "differs";
    if (!cond.observed) {
        cond.residuals.push_back(sub);
    }
    rep.checks.push_back(std::move(cond));

    const Expr G = condition();
    std::vector<std::pair<std::string, Expr>> consequences{{"u0+u3+imu", G}, {"conjugate", conjugate(G)}};
    for (auto v : domain(FunctionId::u)) {
        consequences.emplace_back("D" + index_label(v), total_derivative(G, v));
        consequences.emplace_back("D" + index_label(v) + ".conjugate", conjugate(total_derivative(G, v)));
    }
    const Expr im = imag_unit() * Expr::of(Param::m);
    auto u = [](std::initializer_list<BaseVar> vs) { return Expr::of(jet(FunctionId::u, vs)); };
    consequences.emplace_back("u00-(u33+2imu3-m^2u)",
                              u({x0, x0}) - (u({x3, x3}) + Expr(2) * im * u({x3}) + im * im * u({})));
    for (const auto& [nm, e] : consequences) {
        rep.checks.push_back(numeric_check("ansatz.numeric." + nm, opts, kConditionTol, true,
                                           [&e](const JetPoint& p) { return term_relative(e, p); }));
    }
    for (const auto& id : ids) {
        rep.checks.push_back(identity_numeric("identity.numeric." + id.name, id.lhs, id.rhs, id.expected, opts));
    }
    return rep;
}

SuiteReport conditional_suite(const SuiteOptions& opts)
{
    SuiteReport rep{"conditional-invariants", {}};
    const auto A1 = projective_A1(opts.settings.n_wave);
    const Equation G = condition_equation();
    const auto cis = conditional_invariants(opts.settings);
    for (const auto& ci : cis) {
        auto r = check_conditional_invariant(A1, ci.u_form, G, 2, true, ci.name);
        CheckResult c = from_report(ci.name, r, ci.expected_invariant);
        c.observed = r.verdict == Verdict::conditional || r.verdict == Verdict::absolute;
        if (!ci.note.empty()) {
            c.details.emplace_back("note", ci.note);
        }
        rep.checks.push_back(std::move(c));
    }
    for (const auto& r : conditional_invariant_pullback(opts.settings)) {
        CheckResult c;
        c.name = r.name + ".round-trip";
        c.kind = "exact";
        c.expected = r.expected;
        c.observed = r.holds;
        c.verdict = r.holds ? "holds" : "differs";
        if (!r.holds) {
            c.residuals.push_back(r.residual);
        }
        rep.checks.push_back(std::move(c));
    }
    for (const auto& ci : cis) {
        rep.checks.push_back(
            identity_numeric(ci.name + ".round-trip.numeric", ci.u_form, ci.phi_form, ci.expected_round_trip, opts));
    }
    return rep;
}

CheckResult rank_check(const std::string& name, const std::vector<CatalogEntry>& basis, const SuiteOptions& opts)
{
    std::vector<Expr> exprs;
    for (const auto& e : basis) {
        exprs.push_back(e.expr);
    }
    CheckResult c;
    c.name = name;
    c.kind = "numeric";
    c.expected = true;
    c.observed = true;
    std::size_t rank = 0;
    for (std::uint64_t k = 0; k < 3; ++k) {
        const auto p = random_point(opts.seed + k, opts.settings.n_schrodinger);
        const std::string tag = "seed " + std::to_string(p.seed);
        try {
            const auto r = jacobian_rank(exprs, p);
            const auto lo = jacobian_rank(exprs, p, 1e-7);
            const auto hi = jacobian_rank(exprs, p, 1e-9);
            rank = r.rank;
            c.details.emplace_back(tag, std::to_string(r.rank) + " of " + std::to_string(r.rows) + "x" +
                                            std::to_string(r.cols) + ", threshold " + sci(r.threshold));
            c.observed = c.observed && r.rank == exprs.size() && lo.rank == r.rank && hi.rank == r.rank;
        } catch (const EvaluationError& e) {
            c.details.emplace_back(tag, e.what());
            c.observed = false;
        }
    }
    c.details.emplace_back("expected_rank", std::to_string(exprs.size()));
    c.verdict = "rank " + std::to_string(rank);
    return c;
}

SuiteReport independence_suite(const SuiteOptions& opts)
{
    SuiteReport rep{"independence", {}};
    rep.checks.push_back(rank_check("rank.poincare", poincare_basis(), opts));
    rep.checks.push_back(rank_check("rank.galilei", galilei_basis(), opts));
    rep.checks.push_back(rank_check("rank.extended", extended_basis(opts.settings), opts));
    return rep;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"theorem1", theorem1},
        {"galilei-basis", galilei_suite},
        {"extended-basis", extended_suite},
        {"poincare-basis", poincare_suite},
        {"dictionary", dictionary_suite},
        {"conditional-invariants", conditional_suite},
        {"independence", independence_suite},
    };
    return r;
}

json details_json(const std::vector<std::pair<std::string, std::string>>& ds)
{
    json j = json::object();
    for (const auto& [k, v] : ds) {
        j[k] = v;
    }
    return j;
}

} // namespace

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, f] : registry()) {
            n.push_back(k);
        }
        n.push_back("all");
        return n;
    }();
    return names;
}

Equation condition_equation() { return Equation{condition(), jet(FunctionId::u, {x0}), {}}; }

std::vector<Equation> theorem_system()
{
    auto eqs = with_conjugates(condition_equation());
    eqs.push_back(Equation{wave_equation(), jet(FunctionId::u, {x1, x1}), {x1, x2, x3}});
    return eqs;
}

std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opts)
{
    std::vector<SuiteReport> out;
    for (const auto& [k, f] : registry()) {
        if (name == "all" || name == k) {
            out.push_back(f(opts));
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    return out;
}

std::string render(const std::vector<SuiteReport>& reports, const SuiteOptions& opts, ReportFormat format)
{
    bool all_ok = true;
    for (const auto& r : reports) {
        all_ok = all_ok && r.passed();
    }
    if (format == ReportFormat::human) {
        std::ostringstream os;
        os << "jetsym " << kToolVersion << "  seed " << opts.seed << "  trials " << opts.trials << "  tol "
           << sci(opts.tol) << "  n-wave " << opts.settings.n_wave << "  n-schrodinger "
           << opts.settings.n_schrodinger << "\n";
        for (const auto& r : reports) {
            os << "\n[" << r.suite << "]\n";
            for (const auto& c : r.checks) {
                os << (c.ok() ? "ok    " : "FAIL  ") << c.name << "  " << c.verdict
                   << (c.expected ? "" : "  (expected to fail)");
                for (const auto& [k, v] : c.details) {
                    if (k == "max_gap" || k.rfind("seed ", 0) == 0) {
                        os << "  " << k << "=" << v;
                    }
                }
                os << "\n";
                if (!c.ok()) {
                    for (const auto& e : c.residuals) {
                        os << "      residual: " << residual_text(e) << "\n";
                    }
                }
            }
            os << (r.passed() ? "suite passed" : "suite FAILED") << " (" << r.checks.size() << " checks)\n";
        }
        os << "\n" << (all_ok ? "PASS" : "FAIL") << "\n";
        return os.str();
    }
    json doc;
    doc["tool"] = "jetsym";
    doc["version"] = kToolVersion;
    doc["settings"] = {{"seed", opts.seed},
                       {"trials", opts.trials},
                       {"tol", opts.tol},
                       {"n_wave", opts.settings.n_wave},
                       {"n_schrodinger", opts.settings.n_schrodinger}};
    doc["passed"] = all_ok;
    json suites = json::array();
    for (const auto& r : reports) {
        json s;
        s["suite"] = r.suite;
        s["passed"] = r.passed();
        json checks = json::array();
        for (const auto& c : r.checks) {
            json j;
            j["name"] = c.name;
            j["kind"] = c.kind;
            j["expected"] = c.expected ? "pass" : "fail";
            j["observed"] = c.observed ? "pass" : "fail";
            j["ok"] = c.ok();
            j["verdict"] = c.verdict;
            json res = json::array();
            for (const auto& e : c.residuals) {
                res.push_back(residual_text(e));
            }
            j["residuals"] = res;
            j["details"] = details_json(c.details);
            checks.push_back(j);
        }
        s["checks"] = checks;
        suites.push_back(s);
    }
    doc["suites"] = suites;
    return doc.dump(2) + "\n";
}

std::string render(const InvarianceReport& r, ReportFormat format)
{
    if (format == ReportFormat::human) {
        std::ostringstream os;
        os << r.subject << " under " << r.op << ": " << to_string(r.verdict) << " (order " << r.order_used << ")\n";
        if (r.factor) {
            os << "  factor: " << print(*r.factor) << "\n";
        }
        for (const auto& e : r.residuals) {
            os << "  residual: " << residual_text(e) << "\n";
        }
        if (r.assumes_nonzero_denominators) {
            os << "  assumes nonzero denominators\n";
        }
        return os.str();
    }
    json doc;
    doc["tool"] = "jetsym";
    doc["version"] = kToolVersion;
    doc["subject"] = r.subject;
    doc["operator"] = r.op;
    doc["verdict"] = to_string(r.verdict);
    doc["order"] = r.order_used;
    doc["factor"] = r.factor ? json(print(*r.factor)) : json(nullptr);
    json res = json::array();
    for (const auto& e : r.residuals) {
        res.push_back(residual_text(e));
    }
    doc["residuals"] = res;
    doc["assumes_nonzero_denominators"] = r.assumes_nonzero_denominators;
    return doc.dump(2) + "\n";
}

} // namespace jetsym
