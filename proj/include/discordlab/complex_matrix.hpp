#pragma once

#include <complex>
#include <vector>

#include "discordlab/numeric.hpp"

namespace discordlab {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : dim_(dim), data_(static_cast<size_t>(dim) * dim) {
        if (dim <= 0) throw validation_error("ComplexMatrix: dimension must be positive");
    }

    static ComplexMatrix identity(int dim);
    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
    /// |v><w| for equal-length vectors.
    static ComplexMatrix outer(const std::vector<cplx>& v, const std::vector<cplx>& w);

    int dim() const { return dim_; }

    cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * dim_ + j]; }

    const std::vector<cplx>& data() const { return data_; }

    ComplexMatrix adjoint() const;
    cplx trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(cplx scalar, ComplexMatrix m) { return m *= scalar; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    /// Largest entrywise deviation from Hermitian symmetry.
    double hermiticity_defect() const;
    bool is_hermitian(double tol = kPolicy.hermiticity_tol) const {
        return hermiticity_defect() <= tol;
    }

    /// Largest |a_ij| over i != j.
    double max_offdiagonal() const;

  private:
    int dim_ = 0;
    std::vector<cplx> data_;
};

/// Kronecker product with A-index-major ordering: out[(i*Nb+j),(k*Nb+l)] = A(i,k) B(j,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace discordlab
