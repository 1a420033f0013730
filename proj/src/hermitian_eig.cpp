#include "discordlab/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace discordlab {

namespace {

// One cyclic Jacobi pass structure shared by the value-only and full solvers.
// Rotations act as A <- U' A U with U = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// on the (p, q) plane, where phi = arg(a_pq); this annihilates a_pq.
struct JacobiState {
    ComplexMatrix a;
    std::vector<std::vector<cplx>> v;  // columns; empty when vectors not wanted
    bool want_vectors = false;

    explicit JacobiState(const ComplexMatrix& h, bool vectors) : a(h), want_vectors(vectors) {
        if (vectors) {
            const int n = h.dim();
            v.assign(n, std::vector<cplx>(n, cplx{}));
            for (int i = 0; i < n; ++i) v[i][i] = 1.0;  // v[col][row]
        }
    }

    void rotate(int p, int q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) return;
        const cplx phase = std::conj(apq) / r;  // e^{-i phi}

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double cot2 = (aqq - app) / (2.0 * r);
        double t = 1.0 / (std::abs(cot2) + std::sqrt(1.0 + cot2 * cot2));
        if (cot2 < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const cplx u21 = -s * phase;
        const cplx u22 = c * phase;

        const int n = a.dim();
        for (int k = 0; k < n; ++k) {
            if (k == p || k == q) continue;
            const cplx akp = a(k, p);
            const cplx akq = a(k, q);
            a(k, p) = c * akp + u21 * akq;
            a(k, q) = s * akp + u22 * akq;
            a(p, k) = std::conj(a(k, p));
            a(q, k) = std::conj(a(k, q));
        }
        const double delta = t * r;
        a(p, p) = app - delta;
        a(q, q) = aqq + delta;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if (want_vectors) {
            for (int k = 0; k < n; ++k) {
                const cplx vkp = v[p][k];
                const cplx vkq = v[q][k];
                v[p][k] = c * vkp + u21 * vkq;
                v[q][k] = s * vkp + u22 * vkq;
            }
        }
    }
};

EigenSystem solve(const ComplexMatrix& h, bool want_vectors) {
    if (h.hermiticity_defect() > kPolicy.hermiticity_tol)
        throw validation_error("hermitian_eigensystem: input is not Hermitian (defect " +
                               std::to_string(h.hermiticity_defect()) + ")");

    JacobiState st(h, want_vectors);
    const int n = h.dim();
    bool converged = (st.a.max_offdiagonal() <= kPolicy.jacobi_tol);
    for (int sweep = 0; sweep < kPolicy.jacobi_max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(st.a(p, q)) > 0.0) st.rotate(p, q);
        converged = (st.a.max_offdiagonal() <= kPolicy.jacobi_tol);
    }
    if (!converged)
        throw numeric_error("hermitian_eigensystem: no convergence after " +
                            std::to_string(kPolicy.jacobi_max_sweeps) +
                            " sweeps, max off-diagonal residual " +
                            std::to_string(st.a.max_offdiagonal()));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return st.a(i, i).real() > st.a(j, j).real();
    });

    EigenSystem out;
    out.values.reserve(n);
    for (int k : order) out.values.push_back(st.a(k, k).real());
    if (want_vectors) {
        out.vectors.reserve(n);
        for (int k : order) out.vectors.push_back(std::move(st.v[k]));
    }
    return out;
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& h) { return solve(h, true); }

EigvalVector eigenvalues_descending(const ComplexMatrix& h) { return solve(h, false).values; }

}  // namespace discordlab
