#include "discordlab/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "discordlab/states.hpp"

namespace discordlab {

namespace {

constexpr double kSoundnessTol = 1e-6;

std::string g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void require_range(const SweepRange& r) {
    if (!(r.start <= r.end) || r.steps < 2)
        throw validation_error("sweep: need start <= end and at least 2 steps");
}

double delta_pm14(const MinorReport& report) {
    for (const MinorPair& p : report.pairs)
        if (p.n == 1 && p.m == 4) return p.delta;
    throw numeric_error("sweep: pair (1,4) missing from minor report");
}

}  // namespace

void sweep_bell_mixture(std::ostream& os, SweepRange range, OracleParams oracle) {
    require_range(range);
    os << "b,discord_oracle,delta_pm14,gqd_bound,wd_bound\n";
    for (int i = 0; i < range.steps; ++i) {
        const double b =
            range.start + (range.end - range.start) * static_cast<double>(i) / (range.steps - 1);
        const DensityMatrix rho = bell_mixture(b);
        const double discord = discord_A_exact(rho, oracle.grid, oracle.refine_iters).value;
        const double delta = delta_pm14(minor_report(rho));
        const GqdBoundResult g = gqd_lower_bound(rho);
        os << g12(b) << ',' << g12(discord) << ',' << g12(delta) << ',' << g12(g.bound) << ','
           << g12(g.bound / (2.0 * std::log(2.0))) << "\n";
    }
}

void sweep_werner(std::ostream& os, SweepRange range, OracleParams oracle) {
    require_range(range);
    os << "a,discord_oracle,delta_pm14,gqd_bound,wd_bound,ppt_min_eig\n";
    for (int i = 0; i < range.steps; ++i) {
        const double a =
            range.start + (range.end - range.start) * static_cast<double>(i) / (range.steps - 1);
        const DensityMatrix rho = werner(a);
        const double discord = discord_A_exact(rho, oracle.grid, oracle.refine_iters).value;
        const double delta = delta_pm14(minor_report(rho));
        const GqdBoundResult g = gqd_lower_bound(rho);
        os << g12(a) << ',' << g12(discord) << ',' << g12(delta) << ',' << g12(g.bound) << ','
           << g12(g.bound / (2.0 * std::log(2.0))) << ',' << g12(ppt_min_eigenvalue(rho)) << "\n";
    }
}

void sweep_uc(std::ostream& os, double step) {
    if (!(step > 0.0 && step <= 0.5))
        throw validation_error("sweep: uc step must lie in (0, 0.5]");
    os << "u,c,f,max_delta,ppt_min_eig\n";
    const int nu = static_cast<int>(std::floor((0.5 + 1e-9) / step)) + 1;
    for (int i = 0; i < nu; ++i) {
        const double u = static_cast<double>(i) * step;
        const int nc = static_cast<int>(std::floor((1.0 - 2.0 * u + 1e-9) / step)) + 1;
        for (int j = 0; j < nc; ++j) {
            const double c = static_cast<double>(j) * step;
            const DensityMatrix rho = uc_family(u, c);
            const MinorReport report = minor_report(rho);
            os << g12(u) << ',' << g12(c) << ',' << g12(uc_f(u, c)) << ','
               << g12(report.max_delta) << ',' << g12(ppt_min_eigenvalue(rho)) << "\n";
        }
    }
}

CompareSummary oracle_compare(std::ostream& os, int dim_a, int dim_b, int count, uint64_t seed,
                              EnsembleKind ensemble, bool include_reference,
                              OracleParams oracle) {
    if (dim_a != 2 || (dim_b != 2 && dim_b != 3 && dim_b != 4))
        throw validation_error("oracle_compare: dims must be one of 2x2, 2x3, 2x4");
    if (count < 1 || count > 10000)
        throw validation_error("oracle_compare: count must lie in [1, 10000]");
    if (include_reference && dim_b != 2)
        throw validation_error("oracle_compare: the reference row is the d=2 maximally "
                               "entangled state and needs 2x2 dims");

    os << "index,gqd_bound,gqd_brute,wd_bound,wd_exact,gqd_violation,wd_violation\n";
    CompareSummary summary;
    summary.max_violation = -std::numeric_limits<double>::infinity();
    double gqd_gap_total = 0.0, wd_gap_total = 0.0;

    auto emit = [&](int index, const DensityMatrix& rho) {
        const double gb = gqd_lower_bound(rho).bound;
        const double go = gqd_brute(rho, oracle.grid, oracle.refine_iters).value;
        const double wb = gb / (2.0 * std::log(2.0));
        const double wo = work_deficit_exact(rho, oracle.grid, oracle.refine_iters).value;
        const bool gviol = gb > go + kSoundnessTol;
        const bool wviol = wb > wo + kSoundnessTol;
        os << index << ',' << g12(gb) << ',' << g12(go) << ',' << g12(wb) << ',' << g12(wo) << ','
           << (gviol ? 1 : 0) << ',' << (wviol ? 1 : 0) << "\n";
        ++summary.count;
        summary.gqd_violations += gviol;
        summary.wd_violations += wviol;
        summary.max_violation = std::max({summary.max_violation, gb - go, wb - wo});
        gqd_gap_total += go - gb;
        wd_gap_total += wo - wb;
    };

    if (include_reference) emit(-1, max_entangled(2));
    for (int i = 0; i < count; ++i) {
        const uint64_t state_seed = seed + static_cast<uint64_t>(i);
        const DensityMatrix rho = ensemble == EnsembleKind::random
                                      ? random_bipartite(dim_a, dim_b, state_seed)
                                      : random_zero_discord(dim_b, state_seed);
        emit(i, rho);
    }
    summary.mean_gqd_gap = gqd_gap_total / summary.count;
    summary.mean_wd_gap = wd_gap_total / summary.count;
    return summary;
}

}  // namespace discordlab
