#pragma once

#include <vector>

#include "discordlab/complex_matrix.hpp"

namespace discordlab {

/// Eigenvalues sorted in non-increasing order. For a density matrix source the
/// entries sum to 1; for a partial transpose they may contain negative values.
using EigvalVector = std::vector<double>;

struct EigenSystem {
    EigvalVector values;              // descending
    std::vector<std::vector<cplx>> vectors;  // vectors[k] pairs with values[k]
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
/// Converges when the largest off-diagonal magnitude drops below the policy
/// tolerance; throws numeric_error with the residual if 100 sweeps do not
/// suffice, and validation_error for non-Hermitian input.
EigenSystem hermitian_eigensystem(const ComplexMatrix& h);

/// Eigenvalues only (same solver, no vector accumulation).
EigvalVector eigenvalues_descending(const ComplexMatrix& h);

}  // namespace discordlab
