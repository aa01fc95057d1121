#pragma once

#include <jetsym/catalog.hpp>
#include <jetsym/invariance.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace jetsym {

inline constexpr const char* kToolVersion = "0.1.0";

struct SuiteOptions {
    std::uint64_t seed = 42;
    int trials = 100;
    double tol = 1e-9;
    Settings settings;
};

/// One verdict inside a suite. A check is ok when what was observed matches
/// what was expected; negative controls expect a failure.
struct CheckResult {
    std::string name;
    /// "exact" or "numeric".
    std::string kind;
    bool expected = true;
    bool observed = false;
    std::string verdict;
    std::vector<Expr> residuals;
    /// Extra key/value facts (ranks, gaps, per-generator verdicts).
    std::vector<std::pair<std::string, std::string>> details;

    bool ok() const { return expected == observed; }
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Runs a named suite; "all" runs every suite in order. Throws
/// std::invalid_argument for an unknown name.
std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opts = {});

/// The wave-setting system: the condition, its conjugate
/// and the wave equation solved for u_11.
std::vector<Equation> theorem_system();
/// The condition solved for u_0 with consequences in every direction.
Equation condition_equation();

enum class ReportFormat { human, structured };

/// Deterministic rendering; the structured form is JSON.
std::string render(const std::vector<SuiteReport>& reports, const SuiteOptions& opts, ReportFormat format);
std::string render(const InvarianceReport& report, ReportFormat format);

} // namespace jetsym
