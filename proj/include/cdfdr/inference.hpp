#ifndef CDFDR_INFERENCE_HPP_
#define CDFDR_INFERENCE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "cdfdr/skewbeta.hpp"

namespace cdfdr {

enum class Method { cd_bh, hc, local_fdr, efron_density };

struct RejectionResult {
    Method method = Method::cd_bh;
    double level = 0.05;     // alpha, alpha0 or fdr cutoff, per method
    double pi0_used = 1.0;
    std::vector<std::size_t> rejected;  // original indices, ascending
    std::size_t k = 0;                  // count rejected / HC argmax index
    std::vector<double> scores;         // per-hypothesis score, per method
};

// Comparison-distribution BH rule: the rejection region {u : D~(u)/u > pi0/alpha}
// and the step-up form k = max{i : u_(i) <= (i/N)(alpha/pi0)} are both computed
// and must agree; the step-up result is returned. Scores hold D~(u_i)/u_i.
RejectionResult cd_bh(std::span<const double> pvalues, double alpha, double pi0 = 1.0);

// Higher Criticism threshold: k = argmax over eligible i of
// (i/N - u_(i)) / sqrt(u_(i)(1 - u_(i))), i <= floor(alpha0 N), u_(i) >= 1/N
// (i = 1 always eligible). Rejects the k smallest p-values.
RejectionResult hc_threshold(std::span<const double> pvalues, double alpha0 = 0.1);

// CD-based local fdr, fdr(z) = min(1, pi0 / d-hat(F0(z))) with the clipped
// null-adjusted density. Model must carry a null model and pi0.
std::vector<double> local_fdr(std::span<const double> zscores, const CDModel& model);

// Same rule on the p-value scale (identity null): fdr(u) = min(1, pi0/d-hat(u)).
std::vector<double> local_fdr_from_pvalues(std::span<const double> pvalues,
                                           const CDModel& model);

// Efron's density threshold: reject {i : d-hat(u_i) > pi0/(2 alpha)}.
RejectionResult efron_density_reject(std::span<const double> pvalues, const CDModel& model,
                                     double alpha, double pi0);

} // namespace cdfdr

#endif // CDFDR_INFERENCE_HPP_
