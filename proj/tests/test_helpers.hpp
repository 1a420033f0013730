#pragma once

#include <cmath>
#include <vector>

#include "discordlab/density_matrix.hpp"

namespace test_helpers {

using discordlab::ComplexMatrix;
using discordlab::cplx;

inline double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += std::norm(a(i, j) - b(i, j));
    return std::sqrt(s);
}

/// Independent 2x2 principal-minor oracle: plain complex determinant of the
/// {n, m} submatrix (1-based).
inline cplx det2_oracle(const ComplexMatrix& a, int n, int m) {
    const int i = n - 1, j = m - 1;
    return a(i, i) * a(j, j) - a(i, j) * a(j, i);
}

/// Shannon entropy in bits of an explicit spectrum; the independent route for
/// entropy expectations.
inline double shannon_bits(const std::vector<double>& p) {
    double s = 0.0;
    for (double v : p)
        if (v > 0.0) s -= v * std::log2(v);
    return s;
}

inline std::vector<std::pair<int, int>> standard_dims() {
    return {{2, 2}, {2, 3}, {2, 4}, {3, 3}};
}

}  // namespace test_helpers
