#ifndef CDFDR_NULL_MODEL_HPP_
#define CDFDR_NULL_MODEL_HPP_

#include <span>
#include <vector>

namespace cdfdr {

// Empirical null F0 = Phi((z - mu0)/sigma0) fitted by robust biweight
// M-estimation of the normal QQ relation.
struct NullModel {
    double mu0 = 0.0;
    double sigma0 = 1.0;
    double tuning_k = 4.685;
    int iterations = 0;
    bool converged = true;
};

// Tukey's biweight influence function: z[1-(z/k)^2]^2 for |z| <= k, else 0.
double biweight_psi(double z, double k);

// Integrated biweight loss rho(z) = (k^2/6)(1 - [1-(z/k)^2]^3) capped at k^2/6.
double biweight_rho(double z, double k);

// Per-iteration IRLS state, recorded when a trace sink is supplied.
struct IrlsIteration {
    double mu0;
    double sigma0;
    double scale;  // MAD-based residual scale used for the weights
};

// Fit (mu0, sigma0) by iteratively reweighted least squares on the pairs
// (Phi^{-1}((i-0.5)/N), z_(i)) with biweight weights and MAD/0.6745 residual
// scale re-estimated each iteration. Initialized from median and MAD of the
// raw z-scores.
NullModel fit_empirical_null(std::span<const double> zscores, double tuning_k = 4.685,
                             double tol = 1e-8, int max_iter = 50,
                             std::vector<IrlsIteration>* trace = nullptr);

// z = Phi^{-1}(T_df(t)); the t CDF is clamped to [1e-15, 1-1e-15] before
// inversion, with *clamped set when the clamp was active.
double z_from_t(double t, double df, bool* clamped = nullptr);

enum class Sided { two_sided, left, right };

// P-values from z-scores under a fitted null, clamped to [eps, 1-eps] with
// eps = 1/(10N).
std::vector<double> pvalues_from_z(std::span<const double> zscores, const NullModel& null,
                                   Sided sided);

} // namespace cdfdr

#endif // CDFDR_NULL_MODEL_HPP_
