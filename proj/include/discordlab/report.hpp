#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "discordlab/bounds.hpp"
#include "discordlab/criteria.hpp"
#include "discordlab/oracle.hpp"

namespace discordlab {

struct AnalyzeOptions {
    double tol = kPolicy.comparison_tol;
    bool with_oracle = false;
    int grid = kDefaultOracleGrid;
    int refine_iters = kDefaultOracleRefine;
};

struct OracleSection {
    OracleResult discord;
    OracleResult gqd;
    OracleResult work_deficit;  // value in nats
};

/// Everything the analyze command reports for one state. The criterion and
/// oracle sections exist only for qubit A side; the bound path works for any
/// dimensions.
struct AnalysisReport {
    int dim_a = 0;
    int dim_b = 0;
    double tolerance = 0.0;
    std::optional<MinorReport> minors;
    std::optional<CriterionVerdict> verdict;
    double ppt_min_eig = 0.0;
    GqdBoundResult gqd;
    double wd_bound = 0.0;
    std::optional<OracleSection> oracle;
};

AnalysisReport analyze(const DensityMatrix& rho, const AnalyzeOptions& opts = {});

/// Human-readable rendering; the descriptor names the input (family or file).
std::string render_text(const AnalysisReport& report, const std::string& descriptor);

/// Machine contract. Deliberately carries no input descriptor so that
/// analyzing a generated file reproduces the in-memory report byte for byte.
nlohmann::ordered_json render_json(const AnalysisReport& report);

}  // namespace discordlab
