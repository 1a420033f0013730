#pragma once

#include <optional>

#include "discordlab/bloch.hpp"
#include "discordlab/matops.hpp"

namespace discordlab {

/// Brute-force optimizer output. The achieving angles are always carried so a
/// reported value can be reproduced.
struct OracleResult {
    double value = 0.0;
    MeasurementAngles argmin_angles;
    int grid_resolution = 0;
    bool refined = false;
};

constexpr int kDefaultOracleGrid = 64;
constexpr int kDefaultOracleRefine = 20;
constexpr double kOutcomeProbFloor = 1e-14;

struct ConditionalState {
    double p = 0.0;
    DensityMatrix state;  // embedded 2N x 2N, |v_k><v_k| (x) rho_B|k
};

/// Post-measurement state for one outcome of the projective measurement at
/// the given angles. Empty when the outcome probability is below the floor;
/// such outcomes contribute nothing to the conditional entropy.
std::optional<ConditionalState> conditional_state(const DensityMatrix& rho,
                                                  MeasurementAngles angles, int outcome);

/// sum_i p_i S(rho_i) in bits for the measurement at the given angles.
double conditional_entropy(const DensityMatrix& rho, MeasurementAngles angles);

/// S(rho_B) - conditional_entropy at fixed angles, in bits.
double classical_correlation_at(const DensityMatrix& rho, MeasurementAngles angles);

/// sum_k (Pi_k (x) I) rho (Pi_k (x) I): rho with the A side dephased in the
/// basis at the given angles. Zero discord for every choice of angles.
DensityMatrix dephased(const DensityMatrix& rho, MeasurementAngles angles);

/// S(rho_A) + S(rho_B) - S(rho) in bits.
double mutual_information(const DensityMatrix& rho);

/// Exact quantum discord D_A = I - sup C over rank-1 projective measurements
/// on the qubit A side, via a theta x phi grid (grid x 2*grid points) plus
/// local refinement passes that halve the step each pass. Clamped at 0.
OracleResult discord_A_exact(const DensityMatrix& rho, int grid = kDefaultOracleGrid,
                             int refine_iters = kDefaultOracleRefine);

/// Exact geometric discord: min over measurement bases of the squared
/// Hilbert-Schmidt distance to the dephased state. For a fixed basis the
/// dephased state is the Hilbert-Schmidt projection of rho onto that
/// zero-discord subfamily, so the inner minimization is closed-form.
OracleResult gqd_brute(const DensityMatrix& rho, int grid = kDefaultOracleGrid,
                       int refine_iters = kDefaultOracleRefine);

/// Exact one-way work deficit: min over measurement bases of
/// S(rho || dephased(rho)), in nats.
OracleResult work_deficit_exact(const DensityMatrix& rho, int grid = kDefaultOracleGrid,
                                int refine_iters = kDefaultOracleRefine);

}  // namespace discordlab
