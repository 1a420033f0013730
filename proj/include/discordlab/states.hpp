#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "discordlab/bloch.hpp"
#include "discordlab/density_matrix.hpp"

namespace discordlab {

enum class BellKind { psi_plus, psi_minus, phi_plus, phi_minus };

BellKind bell_kind_from_string(const std::string& name);  // "psi+", "psi-", "phi+", "phi-"
std::string to_string(BellKind kind);

/// Werner state a|psi-><psi-| + (1-a)/4 I on 2x2, 0 <= a <= 1.
DensityMatrix werner(double a);

/// Rank-1 projector onto the named Bell vector.
DensityMatrix bell(BellKind kind);

/// b|psi-><psi-| + (1-b)|phi+><phi+|, 0 <= b <= 1.
DensityMatrix bell_mixture(double b);

/// Two-parameter 2x3 family: u on |02>,|12>, f on |phi+>,|phi->,|psi+>, c on
/// |psi->, with f = (1 - 2u - c)/3 forced by unit trace. Throws when the
/// (u, c) pair makes f infeasible.
DensityMatrix uc_family(double u, double c);

/// f value the trace constraint assigns to (u, c).
inline double uc_f(double u, double c) { return (1.0 - 2.0 * u - c) / 3.0; }

/// Maximally entangled |phi+> = sum_i |ii>/sqrt(d) on d x d, 2 <= d <= 8.
DensityMatrix max_entangled(int d);

/// Classical-quantum state sum_k p_k |k><k| (x) sigma_k with the basis pair
/// taken from the Bloch angles. Zero discord with respect to A by
/// construction.
DensityMatrix zero_discord(const std::vector<double>& p, MeasurementAngles basis,
                           const std::vector<DensityMatrix>& sigmas);

/// G G^dagger / Tr(G G^dagger) with G a seeded dim x rank complex Gaussian
/// matrix (SplitMix64 stream, row-major, re then im).
DensityMatrix random_density(int dim, int rank, uint64_t seed);

/// Random bipartite state of full rank on dimA x dimB.
DensityMatrix random_bipartite(int dim_a, int dim_b, uint64_t seed);

/// Random classical-quantum state on 2 x dimB (random weights, basis and
/// B-side blocks), deterministic per seed.
DensityMatrix random_zero_discord(int dim_b, uint64_t seed);

// --- state file format ---------------------------------------------------
// JSON object { "dimA": M, "dimB": N, "entries": [[re, im], ...] } with the
// entries row-major, (M*N)^2 of them, written with 17 significant digits.

void write_state(std::ostream& os, const DensityMatrix& rho);
void write_state_file(const std::string& path, const DensityMatrix& rho);

DensityMatrix read_state(std::istream& is);
DensityMatrix read_state_file(const std::string& path);

}  // namespace discordlab
