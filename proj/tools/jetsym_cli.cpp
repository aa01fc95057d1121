#include <jetsym/suites.hpp>
#include <jetsym/syntax.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <string>

using namespace jetsym;

namespace {

struct Common {
    std::uint64_t seed = 42;
    int trials = 100;
    double tol = 1e-9;
    int n_wave = 3;
    int n_schrodinger = 2;
    std::string format = "human";

    SuiteOptions options() const
    {
        SuiteOptions o;
        o.seed = seed;
        o.trials = trials;
        o.tol = tol;
        o.settings.n_wave = n_wave;
        o.settings.n_schrodinger = n_schrodinger;
        return o;
    }
    ReportFormat report_format() const { return format == "structured" ? ReportFormat::structured : ReportFormat::human; }
};

void add_common(CLI::App* app, Common& c)
{
    app->add_option("--seed", c.seed, "Base seed for random points (default 42, or $JETSYM_SEED)");
    app->add_option("--trials", c.trials, "Random points per numeric check")->check(CLI::PositiveNumber);
    app->add_option("--tol", c.tol, "Relative tolerance for numeric identities")->check(CLI::PositiveNumber);
    app->add_option("--n-wave", c.n_wave, "Space-time dimension n in A1")->check(CLI::PositiveNumber);
    app->add_option("--n-schrodinger", c.n_schrodinger, "n in N2 and rho")->check(CLI::PositiveNumber);
    app->add_option("--format", c.format, "human or structured (JSON)")
        ->check(CLI::IsMember({"human", "structured"}));
}

std::string read_text(const std::string& arg)
{
    if (arg != "-") {
        return arg;
    }
    std::string s(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.pop_back();
    }
    return s;
}

// Highest-order jet the constraint can be solved for; jets with more
// derivatives along earlier coordinates are tried first.
Equation pick_equation(const Expr& G)
{
    const int ord = jet_order(G);
    if (ord < 0) {
        throw std::invalid_argument("condition contains no derivative jets");
    }
    std::vector<JetVar> cands;
    for (const auto& j : jet_vars(G)) {
        if (j.order() == ord) {
            cands.push_back(j);
        }
    }
    std::sort(cands.begin(), cands.end(), [](const JetVar& a, const JetVar& b) {
        if (a.function != b.function) {
            return a.function < b.function;
        }
        return a.index.counts() > b.index.counts();
    });
    for (const auto& j : cands) {
        try {
            consequences(G, j, ord);
            return Equation{G, j, {}};
        } catch (const NotSolvableError&) {
        }
    }
    throw NotSolvableError("condition cannot be solved for any of its highest-order jets");
}

} // namespace

int main(int argc, char** argv)
{
    Common common;
    if (const char* env = std::getenv("JETSYM_SEED")) {
        try {
            common.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "ignoring JETSYM_SEED='" << env << "'\n";
        }
    }

    CLI::App app{"Exact jet-space symmetry checks"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run a verification suite");
    std::string suite;
    run->add_option("suite", suite, "Suite name")->required();
    add_common(run, common);

    auto* check = app.add_subcommand("check", "Check an expression against a catalog operator");
    std::string op_name;
    std::string expr_text;
    std::string cond_text;
    int order = 2;
    check->add_option("operator", op_name, "Operator name (see 'list operators')")->required();
    check->add_option("expr", expr_text, "Expression, or - for stdin")->required();
    check->add_option("--condition", cond_text, "Side condition; its consequences are used");
    check->add_option("--order", order, "Prolongation order")->check(CLI::NonNegativeNumber);
    add_common(check, common);

    auto* parse_cmd = app.add_subcommand("parse", "Print an expression in canonical form");
    std::string parse_text;
    parse_cmd->add_option("expr", parse_text, "Expression, or - for stdin")->required();
    add_common(parse_cmd, common);

    auto* list = app.add_subcommand("list", "List suites, operators or catalog entries");
    std::string what = "entries";
    list->add_option("what", what, "suites | operators | entries")->check(CLI::IsMember({"suites", "operators", "entries"}));
    add_common(list, common);

    CLI11_PARSE(app, argc, argv);
    const SuiteOptions opts = common.options();

    try {
        if (*run) {
            const auto reports = run_suite(suite, opts);
            std::cout << render(reports, opts, common.report_format());
            const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
            return ok ? 0 : 1;
        }
        if (*check) {
            const auto X = find_operator(op_name, opts.settings);
            if (!X) {
                std::cerr << "unknown operator '" << op_name << "'\n";
                return 2;
            }
            const std::string text = read_text(expr_text);
            const Expr F = parse(text, opts.settings);
            InvarianceReport rep;
            if (!cond_text.empty()) {
                const Expr G = parse(read_text(cond_text), opts.settings);
                rep = check_conditional_invariant(*X, F, pick_equation(G), order, true, text);
            } else {
                rep = check_absolute({*X}, F, order, text).front();
                if (rep.verdict == Verdict::fails && !F.is_zero()) {
                    if (auto lam = relative_factor(*X, F, order)) {
                        rep.verdict = Verdict::relative;
                        rep.factor = std::move(lam);
                    }
                }
            }
            std::cout << render(rep, common.report_format());
            return rep.passed() ? 0 : 1;
        }
        if (*parse_cmd) {
            std::cout << print(parse(read_text(parse_text), opts.settings)) << "\n";
            return 0;
        }
        if (*list) {
            if (what == "suites") {
                for (const auto& s : suite_names()) {
                    std::cout << s << "\n";
                }
            } else if (what == "operators") {
                for (const auto& f : all_operators(opts.settings)) {
                    std::cout << f.name << "\n";
                }
            } else {
                for (const auto& e : all_entries(opts.settings)) {
                    std::cout << e.name << "\t" << e.group << "\n";
                }
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
