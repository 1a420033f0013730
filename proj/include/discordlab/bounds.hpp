#pragma once

#include "discordlab/matops.hpp"

namespace discordlab {

/// Minimum of L(x) = (x - lam)^2 + (x - lam_prime)^2 over [lo, hi].
struct IntervalMin {
    double argmin = 0.0;
    double value = 0.0;
};

/// The vertex (lam + lam_prime)/2 clamped into the interval. lo may exceed hi
/// only within the interval slack (the interval then collapses to a point);
/// beyond that it is an internal interval-construction bug and throws.
IntervalMin quadratic_min_on_interval(double lam, double lam_prime, double lo, double hi);

/// Output of the sequential eigenvalue-vector minimization.
struct GqdBoundResult {
    EigvalVector lambda;        // spectrum of rho, descending
    EigvalVector lambda_prime;  // spectrum of the partial transpose, descending
    std::vector<double> lambda_min;  // constructed minimizer sequence
    std::vector<double> L;           // per-index minima
    double bound = 0.0;              // (1/2) sum L_i
};

/// Lower bound on geometric quantum discord from the eigenvalue vectors of
/// rho and its partial transpose. Greedy pass i = 1..MN over intervals
/// [ (1 - S)/(MN - i + 1), min{1 - S, previous} ] with the previous minimizer
/// seeded at 1; once the minimizer mass reaches 1 every later minimizer is an
/// exact zero and L_i = lambda_i^2 + lambda_prime_i^2.
GqdBoundResult gqd_lower_bound(const DensityMatrix& rho);

/// One-way work deficit lower bound: gqd_lower_bound / (2 ln 2), in nats.
double work_deficit_lower_bound(const DensityMatrix& rho);

}  // namespace discordlab
