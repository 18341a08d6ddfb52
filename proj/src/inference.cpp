#include "cdfdr/inference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cdfdr/errors.hpp"

namespace cdfdr {

namespace {

std::vector<std::size_t> ascending_order(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    return order;
}

void check_pvalues(std::span<const double> p, const char* fn) {
    for (double u : p)
        if (!std::isfinite(u) || u <= 0.0 || u > 1.0)
            throw domain_error(std::string(fn) + ": p-values must lie in (0, 1]");
}

} // namespace

RejectionResult cd_bh(std::span<const double> pvalues, double alpha, double pi0) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw domain_error("cd_bh: alpha must lie strictly inside (0, 1)");
    if (!(pi0 > 0.0 && pi0 <= 1.0))
        throw domain_error("cd_bh: pi0 must lie in (0, 1]");
    check_pvalues(pvalues, "cd_bh");

    const std::size_t n = pvalues.size();
    RejectionResult result;
    result.method = Method::cd_bh;
    result.level = alpha;
    result.pi0_used = pi0;
    if (n == 0) return result;

    const std::vector<std::size_t> order = ascending_order(pvalues);
    const double nn = static_cast<double>(n);
    const double threshold = pi0 / alpha;

    // Per-hypothesis score D~(u_i)/u_i with maximal rank on ties.
    std::vector<double> rank(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t hi = r;
        while (hi + 1 < n && pvalues[order[hi + 1]] == pvalues[order[r]]) ++hi;
        for (std::size_t q = r; q <= hi; ++q) rank[order[q]] = static_cast<double>(hi + 1);
        r = hi;
    }
    result.scores.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        result.scores[i] = rank[i] / (nn * pvalues[i]);

    // Region form of the rule: the largest sorted index whose empirical-to-
    // uniform ratio clears pi0/alpha fixes the rejection threshold u_(i*).
    // Boundary equality counts as clearing, matching the step-up convention.
    std::size_t k_region = 0;
    for (std::size_t i = n; i >= 1; --i) {
        const double u = pvalues[order[i - 1]];
        if (static_cast<double>(i) / nn >= u * threshold) {
            k_region = i;
            break;
        }
    }
    // Step-up form.
    std::size_t k_stepup = 0;
    for (std::size_t i = n; i >= 1; --i) {
        const double u = pvalues[order[i - 1]];
        if (u <= (static_cast<double>(i) / nn) * (alpha / pi0)) {
            k_stepup = i;
            break;
        }
    }
    if (k_region != k_stepup)
        throw estimation_error("cd_bh: region and step-up forms disagree");

    result.k = k_stepup;
    result.rejected.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k_stepup));
    std::sort(result.rejected.begin(), result.rejected.end());
    return result;
}

RejectionResult hc_threshold(std::span<const double> pvalues, double alpha0) {
    if (!(alpha0 > 0.0) || !(alpha0 < 1.0))
        throw domain_error("hc_threshold: alpha0 must lie strictly inside (0, 1)");
    const std::size_t n = pvalues.size();
    if (n < 2) throw estimation_error("hc_threshold: need at least 2 p-values");
    check_pvalues(pvalues, "hc_threshold");

    const std::vector<std::size_t> order = ascending_order(pvalues);
    const double nn = static_cast<double>(n);

    RejectionResult result;
    result.method = Method::hc;
    result.level = alpha0;
    result.pi0_used = 1.0;
    result.scores.resize(n);
    std::vector<double> hc_sorted(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double u = pvalues[order[r]];
        const double stat =
            (static_cast<double>(r + 1) / nn - u) / std::sqrt(u * (1.0 - u));
        hc_sorted[r] = stat;
        result.scores[order[r]] = stat;
    }

    const std::size_t limit =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(alpha0 * nn)));
    std::size_t best = 0;  // sorted position of the argmax
    bool found = false;
    for (std::size_t r = 0; r < std::min(limit, n); ++r) {
        if (pvalues[order[r]] < 1.0 / nn) continue;  // eligibility floor
        if (!found || hc_sorted[r] > hc_sorted[best]) {
            best = r;
            found = true;
        }
    }
    if (!found) best = 0;  // i = 1 always eligible as a fallback

    result.k = best + 1;
    result.rejected.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(result.k));
    std::sort(result.rejected.begin(), result.rejected.end());
    return result;
}

std::vector<double> local_fdr(std::span<const double> zscores, const CDModel& model) {
    if (!model.null) throw domain_error("local_fdr: model carries no null model");
    if (!model.pi0) throw domain_error("local_fdr: model carries no pi0 estimate");
    const double pi0 = *model.pi0;
    std::vector<double> fdr(zscores.size());
    for (std::size_t i = 0; i < zscores.size(); ++i)
        fdr[i] = std::min(1.0, pi0 / null_adjusted_density_clipped(model, zscores[i]));
    return fdr;
}

std::vector<double> local_fdr_from_pvalues(std::span<const double> pvalues,
                                           const CDModel& model) {
    if (!model.pi0) throw domain_error("local_fdr: model carries no pi0 estimate");
    const double pi0 = *model.pi0;
    std::vector<double> fdr(pvalues.size());
    for (std::size_t i = 0; i < pvalues.size(); ++i)
        fdr[i] = std::min(1.0, pi0 / cd_eval_clipped(model, pvalues[i]));
    return fdr;
}

RejectionResult efron_density_reject(std::span<const double> pvalues, const CDModel& model,
                                     double alpha, double pi0) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw domain_error("efron_density_reject: alpha must lie strictly inside (0, 1)");
    if (!(pi0 > 0.0 && pi0 <= 1.0))
        throw domain_error("efron_density_reject: pi0 must lie in (0, 1]");

    RejectionResult result;
    result.method = Method::efron_density;
    result.level = alpha;
    result.pi0_used = pi0;
    const double threshold = pi0 / (2.0 * alpha);
    result.scores.resize(pvalues.size());
    for (std::size_t i = 0; i < pvalues.size(); ++i) {
        const double d = cd_eval(model, pvalues[i]);
        result.scores[i] = d;
        if (d > threshold) result.rejected.push_back(i);
    }
    result.k = result.rejected.size();
    return result;
}

} // namespace cdfdr
