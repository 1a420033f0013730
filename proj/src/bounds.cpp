#include "discordlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace discordlab {

IntervalMin quadratic_min_on_interval(double lam, double lam_prime, double lo, double hi) {
    if (lo > hi) {
        if (lo - hi > kPolicy.interval_slack)
            throw numeric_error("quadratic_min_on_interval: interval [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "] is inverted");
        hi = lo;
    }
    const double vertex = 0.5 * (lam + lam_prime);
    const double x = std::clamp(vertex, lo, hi);
    const double dl = x - lam;
    const double dp = x - lam_prime;
    return {x, dl * dl + dp * dp};
}

GqdBoundResult gqd_lower_bound(const DensityMatrix& rho) {
    GqdBoundResult result;
    result.lambda = eigenvalues_descending(rho.mat());
    result.lambda_prime = eigenvalues_descending(partial_transpose(rho).mat);

    const int mn = rho.dim();
    result.lambda_min.reserve(mn);
    result.L.reserve(mn);

    double mass = 0.0;      // sum of accepted minimizers
    double prev = 1.0;      // lambda_min,0 sentinel, so interval_1 = [1/MN, 1]
    double total = 0.0;
    for (int i = 0; i < mn; ++i) {
        const double li = result.lambda[i];
        const double lpi = result.lambda_prime[i];
        const double remaining = 1.0 - mass;
        if (remaining <= kPolicy.exhaustion_tol) {
            result.lambda_min.push_back(0.0);
            result.L.push_back(li * li + lpi * lpi);
            total += result.L.back();
            continue;
        }
        const double lo = remaining / static_cast<double>(mn - i);
        const double hi = std::min(remaining, prev);
        const IntervalMin step = quadratic_min_on_interval(li, lpi, lo, hi);
        result.lambda_min.push_back(step.argmin);
        result.L.push_back(step.value);
        total += step.value;
        mass += step.argmin;
        prev = step.argmin;
    }
    result.bound = 0.5 * total;
    return result;
}

double work_deficit_lower_bound(const DensityMatrix& rho) {
    return gqd_lower_bound(rho).bound / (2.0 * std::log(2.0));
}

}  // namespace discordlab
