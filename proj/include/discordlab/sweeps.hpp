#pragma once

#include <cstdint>
#include <iosfwd>

#include "discordlab/report.hpp"

namespace discordlab {

struct SweepRange {
    double start = 0.0;
    double end = 1.0;
    int steps = 101;  // number of points, endpoints included
};

struct OracleParams {
    int grid = kDefaultOracleGrid;
    int refine_iters = kDefaultOracleRefine;
};

/// CSV columns: b, discord_oracle, delta_pm14, gqd_bound, wd_bound.
void sweep_bell_mixture(std::ostream& os, SweepRange range, OracleParams oracle = {});

/// CSV columns: a, discord_oracle, delta_pm14, gqd_bound, wd_bound, ppt_min_eig.
void sweep_werner(std::ostream& os, SweepRange range, OracleParams oracle = {});

/// Feasible-triangle scan (0 <= u <= 1/2, 0 <= c <= 1 - 2u) at the given step.
/// CSV columns: u, c, f, max_delta, ppt_min_eig.
void sweep_uc(std::ostream& os, double step);

enum class EnsembleKind { random, zero_discord };

struct CompareSummary {
    int count = 0;
    int gqd_violations = 0;
    int wd_violations = 0;
    double max_violation = 0.0;  // max over rows of bound - oracle (can be negative)
    double mean_gqd_gap = 0.0;   // mean of gqd_brute - gqd_bound
    double mean_wd_gap = 0.0;
};

/// Random-ensemble soundness run. Writes one CSV row per state with columns
/// index, gqd_bound, gqd_brute, wd_bound, wd_exact, gqd_violation,
/// wd_violation; returns the summary. include_reference injects the d=2
/// maximally entangled state as row index -1 (2x2 only).
CompareSummary oracle_compare(std::ostream& os, int dim_a, int dim_b, int count, uint64_t seed,
                              EnsembleKind ensemble = EnsembleKind::random,
                              bool include_reference = false, OracleParams oracle = {});

}  // namespace discordlab
