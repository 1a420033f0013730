#include "discordlab/density_matrix.hpp"

#include <cmath>
#include <string>

namespace discordlab {

BipartiteMatrix::BipartiteMatrix(ComplexMatrix m, int dimA, int dimB)
    : mat(std::move(m)), dim_a(dimA), dim_b(dimB) {
    if (dim_a <= 0 || dim_b <= 0 || dim_a * dim_b != mat.dim())
        throw validation_error("BipartiteMatrix: dimA*dimB must equal the matrix dimension");
}

DensityMatrix::DensityMatrix(ComplexMatrix m, int dimA, int dimB)
    : mat_(std::move(m)), dim_a_(dimA), dim_b_(dimB) {
    if (dim_a_ <= 0 || dim_b_ <= 0 || dim_a_ * dim_b_ != mat_.dim())
        throw validation_error("DensityMatrix: dimA*dimB must equal the matrix dimension");
    const double defect = mat_.hermiticity_defect();
    if (!(defect <= kPolicy.hermiticity_tol))
        throw validation_error("DensityMatrix: not Hermitian, defect " + std::to_string(defect));
    const double tr_err = std::abs(mat_.trace() - cplx{1.0, 0.0});
    if (!(tr_err <= kPolicy.trace_tol))
        throw validation_error("DensityMatrix: trace differs from 1 by " + std::to_string(tr_err));
    const EigvalVector ev = eigenvalues_descending(mat_);
    if (!(ev.back() >= -kPolicy.psd_slack))
        throw validation_error("DensityMatrix: not positive semidefinite, smallest eigenvalue " +
                               std::to_string(ev.back()));
}

}  // namespace discordlab
