#pragma once

#include "discordlab/density_matrix.hpp"
#include "discordlab/hermitian_eig.hpp"

namespace discordlab {

/// Partial transpose with respect to the B subsystem:
/// out[(i,j),(k,l)] = in[(i,l),(k,j)]. Hermiticity and trace are preserved;
/// positivity may be lost (that loss is the PPT signal), so the result is a
/// labeled Hermitian matrix, not a revalidated state.
BipartiteMatrix partial_transpose(const BipartiteMatrix& rho);
BipartiteMatrix partial_transpose(const DensityMatrix& rho);

/// rho_A[i][k] = sum_j rho[(i,j),(k,j)].
ComplexMatrix partial_trace_b(const DensityMatrix& rho);
/// rho_B[j][l] = sum_i rho[(i,j),(i,l)].
ComplexMatrix partial_trace_a(const DensityMatrix& rho);

/// Von Neumann entropy in bits; eigenvalues are clamped to [0,1] and values
/// below the entropy-zero cutoff are treated as exact zeros.
double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy in bits of a spectrum (same clamping rules).
double entropy_of_spectrum(const EigvalVector& values);

/// Relative entropy S(rho||sigma) = Tr(rho ln rho - rho ln sigma) in nats.
/// Returns +infinity when rho places more than the support tolerance of mass
/// on the null space of sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Squared Hilbert-Schmidt norm, sum over |entries|^2.
double hs_norm_sq(const ComplexMatrix& a);

/// Trace norm of a Hermitian matrix, sum over |eigenvalues|.
double trace_norm(const ComplexMatrix& a);

/// Second-order principal minor on rows/columns {n, m}, 1-based as in the
/// criterion statements: A[n][n]*A[m][m] - A[n][m]*A[m][n]. Real for Hermitian
/// input; the real part is returned.
double principal_minor_2(const ComplexMatrix& a, int n, int m);

namespace detail {

/// Tr(rho ln rho) in nats from the spectrum (clamped like the entropies).
double tr_rho_ln_rho(const ComplexMatrix& rho);

/// Tr(rho ln rho) - Tr(rho ln sigma) with the first trace precomputed, so
/// per-angle minimizations pay one eigensolve instead of two.
double relative_entropy_given(const ComplexMatrix& rho, double tr_rho_ln_rho_value,
                              const ComplexMatrix& sigma);

}  // namespace detail

}  // namespace discordlab
