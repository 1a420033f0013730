#pragma once

#include <optional>
#include <string>
#include <vector>

#include "discordlab/matops.hpp"

namespace discordlab {

struct MinorPair {
    int n = 0;  // 1-based row/column indices, n < m
    int m = 0;
    double pm_rho = 0.0;
    double pm_rho_tb = 0.0;
    double delta = 0.0;  // |pm_rho - pm_rho_tb|
};

/// Every second-order principal minor of rho and of its partial transpose.
struct MinorReport {
    std::vector<MinorPair> pairs;  // all C(MN, 2) index pairs, n < m
    double max_delta = 0.0;
    double tolerance = 0.0;
    /// Lexicographically first pair attaining max_delta.
    std::optional<std::pair<int, int>> witness_pair;
};

enum class Verdict { NonzeroDiscord, Inconclusive };

std::string to_string(Verdict v);

/// Outcome of the principal-minor criterion. Invariance is never reported as
/// zero discord: the criterion is necessary, not sufficient.
struct CriterionVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<std::pair<int, int>> witness_pair;
    double max_delta = 0.0;
};

/// Evaluates every principal-minor pair on rho and partial_transpose(rho).
/// Only defined for qubit A side (dimA == 2); larger A sides are rejected
/// rather than silently transposed.
MinorReport minor_report(const DensityMatrix& rho, double tol = kPolicy.comparison_tol);

/// NonzeroDiscord when any minor moves beyond tol under partial transpose,
/// Inconclusive otherwise.
CriterionVerdict discord_witness(const DensityMatrix& rho, double tol = kPolicy.comparison_tol);

/// Smallest eigenvalue of the partial transpose; negative means NPT, hence
/// entangled.
double ppt_min_eigenvalue(const DensityMatrix& rho);

}  // namespace discordlab
