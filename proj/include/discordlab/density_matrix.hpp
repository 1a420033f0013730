#pragma once

#include "discordlab/complex_matrix.hpp"
#include "discordlab/hermitian_eig.hpp"

namespace discordlab {

/// Square complex matrix carrying bipartite dimension labels (dimA * dimB ==
/// dim) but no state guarantees. Partial transposes live here: Hermitian and
/// trace 1, possibly not positive semidefinite.
struct BipartiteMatrix {
    ComplexMatrix mat;
    int dim_a = 0;
    int dim_b = 0;

    BipartiteMatrix() = default;
    BipartiteMatrix(ComplexMatrix m, int dimA, int dimB);
};

/// Validated bipartite quantum state: Hermitian within 1e-12 entrywise,
/// unit trace within 1e-10, smallest eigenvalue >= -1e-10.
class DensityMatrix {
  public:
    DensityMatrix(ComplexMatrix m, int dimA, int dimB);

    const ComplexMatrix& mat() const { return mat_; }
    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int dim() const { return mat_.dim(); }

    BipartiteMatrix as_bipartite() const { return BipartiteMatrix(mat_, dim_a_, dim_b_); }

  private:
    ComplexMatrix mat_;
    int dim_a_;
    int dim_b_;
};

}  // namespace discordlab
