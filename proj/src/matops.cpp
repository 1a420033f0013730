#include "discordlab/matops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace discordlab {

namespace {

ComplexMatrix partial_transpose_raw(const ComplexMatrix& m, int dim_a, int dim_b) {
    ComplexMatrix out(m.dim());
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_b; ++j)
            for (int k = 0; k < dim_a; ++k)
                for (int l = 0; l < dim_b; ++l)
                    out(i * dim_b + j, k * dim_b + l) = m(i * dim_b + l, k * dim_b + j);
    return out;
}

}  // namespace

BipartiteMatrix partial_transpose(const BipartiteMatrix& rho) {
    return BipartiteMatrix(partial_transpose_raw(rho.mat, rho.dim_a, rho.dim_b), rho.dim_a,
                           rho.dim_b);
}

BipartiteMatrix partial_transpose(const DensityMatrix& rho) {
    return partial_transpose(rho.as_bipartite());
}

ComplexMatrix partial_trace_b(const DensityMatrix& rho) {
    const int ma = rho.dim_a(), nb = rho.dim_b();
    ComplexMatrix out(ma);
    for (int i = 0; i < ma; ++i)
        for (int k = 0; k < ma; ++k)
            for (int j = 0; j < nb; ++j) out(i, k) += rho.mat()(i * nb + j, k * nb + j);
    return out;
}

ComplexMatrix partial_trace_a(const DensityMatrix& rho) {
    const int ma = rho.dim_a(), nb = rho.dim_b();
    ComplexMatrix out(nb);
    for (int j = 0; j < nb; ++j)
        for (int l = 0; l < nb; ++l)
            for (int i = 0; i < ma; ++i) out(j, l) += rho.mat()(i * nb + j, i * nb + l);
    return out;
}

double entropy_of_spectrum(const EigvalVector& values) {
    double s = 0.0;
    for (double lam : values) {
        const double p = std::clamp(lam, 0.0, 1.0);
        if (p < kPolicy.entropy_zero) continue;
        s -= p * std::log2(p);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_of_spectrum(eigenvalues_descending(rho.mat()));
}

namespace detail {

double tr_rho_ln_rho(const ComplexMatrix& rho) {
    double acc = 0.0;
    for (double lam : eigenvalues_descending(rho)) {
        const double p = std::clamp(lam, 0.0, 1.0);
        if (p < kPolicy.entropy_zero) continue;
        acc += p * std::log(p);
    }
    return acc;
}

double relative_entropy_given(const ComplexMatrix& rho, double tr_rho_ln_rho_value,
                              const ComplexMatrix& sigma) {
    // Tr(rho ln sigma) through sigma's eigenbasis. Mass of rho on the null
    // space of sigma beyond the support tolerance means S = +infinity.
    const EigenSystem es = hermitian_eigensystem(sigma);
    const int n = sigma.dim();
    double tr_rho_ln_sigma = 0.0;
    double null_mass = 0.0;
    for (int k = 0; k < n; ++k) {
        // q_k = <w_k| rho |w_k>
        cplx q{};
        for (int i = 0; i < n; ++i) {
            cplx row{};
            for (int j = 0; j < n; ++j) row += rho(i, j) * es.vectors[k][j];
            q += std::conj(es.vectors[k][i]) * row;
        }
        const double qk = std::max(q.real(), 0.0);
        const double sk = es.values[k];
        if (sk <= kPolicy.null_space_eig) {
            null_mass += qk;
            continue;
        }
        if (qk < kPolicy.entropy_zero) continue;
        tr_rho_ln_sigma += qk * std::log(sk);
    }
    if (null_mass > kPolicy.support_rank_tol)
        return std::numeric_limits<double>::infinity();
    return std::max(tr_rho_ln_rho_value - tr_rho_ln_sigma, 0.0);
}

}  // namespace detail

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim())
        throw validation_error("relative_entropy: dimension mismatch");
    return detail::relative_entropy_given(rho.mat(), detail::tr_rho_ln_rho(rho.mat()),
                                          sigma.mat());
}

double hs_norm_sq(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cplx& x : a.data()) s += std::norm(x);
    return s;
}

double trace_norm(const ComplexMatrix& a) {
    if (!a.is_hermitian())
        throw validation_error("trace_norm: input is not Hermitian");
    double s = 0.0;
    for (double lam : eigenvalues_descending(a)) s += std::abs(lam);
    return s;
}

double principal_minor_2(const ComplexMatrix& a, int n, int m) {
    if (n < 1 || m > a.dim() || n >= m)
        throw validation_error("principal_minor_2: need 1 <= n < m <= dim, got n=" +
                               std::to_string(n) + " m=" + std::to_string(m));
    const int i = n - 1, j = m - 1;
    const cplx det = a(i, i) * a(j, j) - a(i, j) * a(j, i);
    return det.real();
}

}  // namespace discordlab
