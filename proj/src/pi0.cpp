#include "cdfdr/pi0.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cdfdr/basis.hpp"
#include "cdfdr/errors.hpp"

namespace cdfdr {

Pi0Estimate mdc_pi0(std::span<const double> pvalues, const CDModel& model, double gamma,
                    double grid_step, int max_degree) {
    const std::size_t n = pvalues.size();
    if (n == 0) throw estimation_error("mdc_pi0: empty sample");
    if (!(gamma >= 1.0)) throw domain_error("mdc_pi0: gamma must be >= 1");
    if (!(grid_step > 0.0)) throw domain_error("mdc_pi0: grid_step must be > 0");
    if (max_degree < 1) throw domain_error("mdc_pi0: max_degree must be >= 1");

    // Evaluate the density once per point, then sort by density so each grid
    // lambda is a prefix of the sorted order; prefix sums of the Legendre
    // scores make every subset's coefficients O(M).
    std::vector<double> density(n);
    for (std::size_t i = 0; i < n; ++i) density[i] = cd_eval(model, pvalues[i]);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return density[i] < density[j]; });

    const std::size_t m = static_cast<std::size_t>(max_degree);
    std::vector<double> prefix(n * m);
    {
        std::vector<double> acc(m, 0.0);
        for (std::size_t r = 0; r < n; ++r) {
            const std::vector<double> leg =
                basis::legendre_vector(max_degree, pvalues[order[r]]);
            for (std::size_t j = 0; j < m; ++j) acc[j] += leg[j];
            std::copy(acc.begin(), acc.end(), prefix.begin() + static_cast<std::ptrdiff_t>(r * m));
        }
    }
    std::vector<double> sorted_density(n);
    for (std::size_t r = 0; r < n; ++r) sorted_density[r] = density[order[r]];

    Pi0Estimate est;
    est.max_degree = max_degree;
    const long steps = std::lround((gamma - 1.0) / grid_step);
    bool have_min = false;
    double best_dev = 0.0;
    std::size_t best_count = 0;

    for (long s = 0; s <= steps; ++s) {
        const double lambda = 1.0 + grid_step * static_cast<double>(s);
        // N_lambda = #{d-hat < lambda}
        const auto it = std::lower_bound(sorted_density.begin(), sorted_density.end(), lambda);
        const std::size_t count = static_cast<std::size_t>(it - sorted_density.begin());
        if (count == 0) continue;

        const double* sums = prefix.data() + (count - 1) * m;
        double dev = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double lp = sums[j] / static_cast<double>(count);
            dev += lp * lp;
        }
        est.path.push_back({lambda, dev, count});
        if (!have_min || dev < best_dev) {
            have_min = true;
            best_dev = dev;
            best_count = count;
            est.lambda_star = lambda;
        }
    }
    if (!have_min)
        throw estimation_error("mdc_pi0: every grid point produced an empty subset");

    est.pi0 = static_cast<double>(best_count) / static_cast<double>(n);
    return est;
}

double storey_pi0(std::span<const double> pvalues, double lambda) {
    if (!(lambda > 0.0) || !(lambda < 1.0))
        throw domain_error("storey_pi0: lambda must lie strictly inside (0, 1)");
    const std::size_t n = pvalues.size();
    if (n == 0) throw estimation_error("storey_pi0: empty sample");
    std::size_t at_most = 0;
    for (double p : pvalues)
        if (p <= lambda) ++at_most;
    const double ecdf = static_cast<double>(at_most) / static_cast<double>(n);
    return std::min(1.0, (1.0 - ecdf) / (1.0 - lambda));
}

} // namespace cdfdr
