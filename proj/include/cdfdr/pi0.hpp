#ifndef CDFDR_PI0_HPP_
#define CDFDR_PI0_HPP_

#include <span>
#include <vector>

#include "cdfdr/skewbeta.hpp"

namespace cdfdr {

struct Pi0PathPoint {
    double lambda;
    double deviance;          // I_lambda = sum_j |LP~_lambda[j]|^2
    std::size_t subset_size;  // N_lambda
};

struct Pi0Estimate {
    double pi0 = 1.0;
    double lambda_star = 1.0;
    std::vector<Pi0PathPoint> path;  // non-empty grid points, lambda ascending
    int max_degree = 10;
};

// Minimum Deviance Criteria: threshold the fitted comparison density at each
// lambda on the grid over [1, gamma], measure the LP-uniformity deviance of
// the retained subset, and report N_{lambda*}/N at the deviance minimum
// (smallest lambda on ties). Empty subsets are skipped.
Pi0Estimate mdc_pi0(std::span<const double> pvalues, const CDModel& model,
                    double gamma = 3.5, double grid_step = 0.01, int max_degree = 10);

// Storey's estimator (1 - D~(lambda)) / (1 - lambda), truncated above at 1.
double storey_pi0(std::span<const double> pvalues, double lambda);

} // namespace cdfdr

#endif // CDFDR_PI0_HPP_
