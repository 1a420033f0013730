#pragma once

#include <stdexcept>
#include <string>

namespace discordlab {

/// Input that fails structural or state validation (bad dimensions, broken
/// Hermiticity, infeasible family parameters, malformed files). The CLI maps
/// this to exit code 2.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal numeric failure (eigensolver non-convergence, broken interval
/// construction). The CLI maps this to exit code 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Central tolerance record shared by the library, the tests and the CLI.
struct NumericPolicy {
    double hermiticity_tol = 1e-12;   // entrywise |a_ij - conj(a_ji)|
    double trace_tol = 1e-10;         // |Tr(rho) - 1|
    double psd_slack = 1e-10;         // smallest eigenvalue >= -psd_slack
    double comparison_tol = 1e-9;     // default tolerance for minor invariance
    double jacobi_tol = 1e-12;        // max off-diagonal magnitude at convergence
    int jacobi_max_sweeps = 100;
    double entropy_zero = 1e-15;      // eigenvalues below this are exact zeros
    double support_rank_tol = 1e-9;   // relative-entropy support mass threshold
    double null_space_eig = 1e-12;    // sigma eigenvalues below this count as null
    double exhaustion_tol = 1e-12;    // 1 - sum(lambda_min) below this ends the greedy pass
    double interval_slack = 1e-12;    // lo <= hi within this before it is a bug
    double tie_eps = 1e-12;           // angle-search value ties
};

inline constexpr NumericPolicy kPolicy{};

}  // namespace discordlab
