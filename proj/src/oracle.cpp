#include "discordlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace discordlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

void require_oracle_input(const DensityMatrix& rho, int grid) {
    if (rho.dim_a() != 2)
        throw validation_error("oracle: measurement optimization requires dimA = 2");
    if (grid < 32) throw validation_error("oracle: grid must be at least 32");
}

// (<v| (x) I) rho (|w> (x) I), an N x N block of the 2N x 2N matrix.
ComplexMatrix b_block(const ComplexMatrix& rho, int nb, const std::array<cplx, 2>& v,
                      const std::array<cplx, 2>& w) {
    ComplexMatrix out(nb);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            const cplx coeff = std::conj(v[i]) * w[k];
            if (coeff == cplx{}) continue;
            for (int j = 0; j < nb; ++j)
                for (int l = 0; l < nb; ++l) out(j, l) += coeff * rho(i * nb + j, k * nb + l);
        }
    return out;
}

ComplexMatrix dephased_raw(const ComplexMatrix& rho, int nb, MeasurementAngles angles) {
    const auto basis = bloch_pair(angles);
    ComplexMatrix out(2 * nb);
    for (int k = 0; k < 2; ++k) {
        const ComplexMatrix block = b_block(rho, nb, basis[k], basis[k]);
        for (int i = 0; i < 2; ++i)
            for (int m = 0; m < 2; ++m) {
                const cplx coeff = basis[k][i] * std::conj(basis[k][m]);
                if (coeff == cplx{}) continue;
                for (int j = 0; j < nb; ++j)
                    for (int l = 0; l < nb; ++l)
                        out(i * nb + j, m * nb + l) += coeff * block(j, l);
            }
    }
    return out;
}

double conditional_entropy_raw(const ComplexMatrix& rho, int nb, MeasurementAngles angles) {
    const auto basis = bloch_pair(angles);
    double total = 0.0;
    for (int k = 0; k < 2; ++k) {
        ComplexMatrix block = b_block(rho, nb, basis[k], basis[k]);
        const double p = block.trace().real();
        if (p <= kOutcomeProbFloor) continue;
        block *= cplx{1.0 / p, 0.0};
        total += p * entropy_of_spectrum(eigenvalues_descending(block));
    }
    return total;
}

struct SearchOutcome {
    MeasurementAngles angles;
    double value = 0.0;
};

// Deterministic grid scan followed by pattern-search refinement. Serial
// ascending loops plus the tie window keep the reported angles the
// lexicographically smallest among near-equal optima.
SearchOutcome minimize_over_angles(const std::function<double(MeasurementAngles)>& f, int grid,
                                   int refine_iters) {
    const double theta_step0 = kPi / static_cast<double>(grid - 1);
    const double phi_step0 = kTwoPi / static_cast<double>(2 * grid);

    SearchOutcome best{{0.0, 0.0}, f({0.0, 0.0})};
    for (int i = 0; i < grid; ++i) {
        const double theta = theta_step0 * static_cast<double>(i);
        for (int j = 0; j < 2 * grid; ++j) {
            if (i == 0 && j == 0) continue;
            const MeasurementAngles a{theta, phi_step0 * static_cast<double>(j)};
            const double v = f(a);
            if (v < best.value - kPolicy.tie_eps) best = {a, v};
        }
    }

    double st = theta_step0;
    double sp = phi_step0;
    for (int pass = 0; pass < refine_iters; ++pass) {
        for (int moves = 0; moves < 50; ++moves) {
            SearchOutcome candidate = best;
            for (int dt = -1; dt <= 1; ++dt)
                for (int dp = -1; dp <= 1; ++dp) {
                    if (dt == 0 && dp == 0) continue;
                    MeasurementAngles a{best.angles.theta + dt * st, best.angles.phi + dp * sp};
                    a.theta = std::clamp(a.theta, 0.0, kPi);
                    a.phi = std::fmod(a.phi + kTwoPi, kTwoPi);
                    const double v = f(a);
                    if (v < candidate.value) candidate = {a, v};
                }
            if (candidate.value >= best.value) break;
            best = candidate;
        }
        st *= 0.5;
        sp *= 0.5;
    }
    return best;
}

SearchOutcome maximize_over_angles(const std::function<double(MeasurementAngles)>& f, int grid,
                                   int refine_iters) {
    SearchOutcome out =
        minimize_over_angles([&](MeasurementAngles a) { return -f(a); }, grid, refine_iters);
    out.value = -out.value;
    return out;
}

}  // namespace

std::optional<ConditionalState> conditional_state(const DensityMatrix& rho,
                                                  MeasurementAngles angles, int outcome) {
    if (rho.dim_a() != 2)
        throw validation_error("conditional_state: requires dimA = 2");
    if (outcome != 0 && outcome != 1)
        throw validation_error("conditional_state: outcome must be 0 or 1");
    const int nb = rho.dim_b();
    const auto basis = bloch_pair(angles);
    ComplexMatrix block = b_block(rho.mat(), nb, basis[outcome], basis[outcome]);
    const double p = block.trace().real();
    if (p <= kOutcomeProbFloor) return std::nullopt;
    block *= cplx{1.0 / p, 0.0};

    ComplexMatrix proj(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) proj(i, j) = basis[outcome][i] * std::conj(basis[outcome][j]);
    return ConditionalState{p, DensityMatrix(kron(proj, block), 2, nb)};
}

double conditional_entropy(const DensityMatrix& rho, MeasurementAngles angles) {
    if (rho.dim_a() != 2)
        throw validation_error("conditional_entropy: requires dimA = 2");
    return conditional_entropy_raw(rho.mat(), rho.dim_b(), angles);
}

double classical_correlation_at(const DensityMatrix& rho, MeasurementAngles angles) {
    const double s_b = entropy_of_spectrum(eigenvalues_descending(partial_trace_a(rho)));
    return s_b - conditional_entropy(rho, angles);
}

DensityMatrix dephased(const DensityMatrix& rho, MeasurementAngles angles) {
    if (rho.dim_a() != 2)
        throw validation_error("dephased: requires dimA = 2");
    return DensityMatrix(dephased_raw(rho.mat(), rho.dim_b(), angles), 2, rho.dim_b());
}

double mutual_information(const DensityMatrix& rho) {
    const double s_a = entropy_of_spectrum(eigenvalues_descending(partial_trace_b(rho)));
    const double s_b = entropy_of_spectrum(eigenvalues_descending(partial_trace_a(rho)));
    return s_a + s_b - von_neumann_entropy(rho);
}

OracleResult discord_A_exact(const DensityMatrix& rho, int grid, int refine_iters) {
    require_oracle_input(rho, grid);
    const int nb = rho.dim_b();
    const double s_b = entropy_of_spectrum(eigenvalues_descending(partial_trace_a(rho)));
    const double info = mutual_information(rho);

    // Maximizing C = S(rho_B) - S(rho|{E}) is minimizing the conditional
    // entropy; S(rho_B) is angle-independent.
    const SearchOutcome res = minimize_over_angles(
        [&](MeasurementAngles a) { return conditional_entropy_raw(rho.mat(), nb, a); }, grid,
        refine_iters);
    const double classical = s_b - res.value;
    return {std::max(info - classical, 0.0), res.angles, grid, refine_iters > 0};
}

OracleResult gqd_brute(const DensityMatrix& rho, int grid, int refine_iters) {
    require_oracle_input(rho, grid);
    const int nb = rho.dim_b();
    const SearchOutcome res = minimize_over_angles(
        [&](MeasurementAngles a) {
            ComplexMatrix diff = rho.mat();
            diff -= dephased_raw(rho.mat(), nb, a);
            return hs_norm_sq(diff);
        },
        grid, refine_iters);
    return {std::max(res.value, 0.0), res.angles, grid, refine_iters > 0};
}

OracleResult work_deficit_exact(const DensityMatrix& rho, int grid, int refine_iters) {
    require_oracle_input(rho, grid);
    const int nb = rho.dim_b();
    const double tr_ln = detail::tr_rho_ln_rho(rho.mat());
    const SearchOutcome res = minimize_over_angles(
        [&](MeasurementAngles a) {
            const double s =
                detail::relative_entropy_given(rho.mat(), tr_ln, dephased_raw(rho.mat(), nb, a));
            // Dephasing can only widen the support, so the sentinel must not
            // fire; if it does the dephased matrix is broken.
            if (std::isinf(s))
                throw numeric_error("work_deficit_exact: support sentinel triggered on a "
                                    "dephased state");
            return s;
        },
        grid, refine_iters);
    return {std::max(res.value, 0.0), res.angles, grid, refine_iters > 0};
}

}  // namespace discordlab
