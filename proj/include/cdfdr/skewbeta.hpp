#ifndef CDFDR_SKEWBETA_HPP_
#define CDFDR_SKEWBETA_HPP_

#include <optional>
#include <span>
#include <vector>

#include "cdfdr/null_model.hpp"

namespace cdfdr {

// Beta pre-flattening model of the comparison density.
struct BetaParams {
    double alpha = 1.0;
    double beta = 1.0;
    double loglik = 0.0;  // total log-likelihood at (alpha, beta)
};

struct LpCoefficient {
    int degree;    // >= 1
    double value;  // LP[degree]
};

// Fitted comparison density
//   d(u) = f_B(u; alpha, beta) * (1 + sum_j LP[j] Leg_j(F_B(u; alpha, beta))).
struct CDModel {
    BetaParams beta_params;
    std::vector<LpCoefficient> coefficients;  // distinct degrees, ascending
    int max_degree = 10;
    std::optional<NullModel> null;
    std::optional<double> pi0;
    std::size_t n = 0;  // sample size the model was fitted on
};

// Two-parameter beta MLE by Newton-Raphson on the digamma score equations,
// method-of-moments start, coordinate-wise golden-section fallback.
// All values must lie strictly inside (0, 1).
BetaParams fit_beta_mle(std::span<const double> pvalues, double tol = 1e-8,
                        int max_iter = 100);

// Total beta log-likelihood at given parameters.
double beta_loglik(std::span<const double> pvalues, double alpha, double beta);

// Smooth p-values v_i = F_B(u_i; alpha, beta).
std::vector<double> smooth_pvalues(std::span<const double> pvalues, const BetaParams& params);

// Raw LP-Fourier coefficients: component j-1 holds N^{-1} sum_i Leg_j(v_i).
std::vector<double> lp_coefficients(std::span<const double> smooth_values, int max_degree);

// Ledwina/Schwarz selection: rank squared coefficients, keep the top-k set
// maximizing sum LP^2 - k log(n)/n over k in {0, ..., max_degree}. Ties in
// the ranking break toward the lower degree.
std::vector<LpCoefficient> select_coefficients(std::span<const double> raw, std::size_t n,
                                               int max_degree);

// Comparison density evaluation; u strictly inside (0, 1). The truncated L2
// series may go negative; cd_eval_clipped floors it for use in divisions.
double cd_eval(const CDModel& model, double u);
double cd_eval_clipped(const CDModel& model, double u, double floor = 1e-3);

// Null-adjusted density d-hat(F0(z)) with F0(z) = Phi((z - mu0)/sigma0).
// Requires the model to carry a NullModel.
double null_adjusted_density(const CDModel& model, double z);
double null_adjusted_density_clipped(const CDModel& model, double z, double floor = 1e-3);

// Parseval deviance: sum of squared selected coefficients.
double deviance(std::span<const LpCoefficient> coefficients);

// Likelihood-ratio check of p-value uniformity: 2[l(alpha,beta) - l(1,1)]
// against chi-square with 2 degrees of freedom.
struct UniformityDiagnostic {
    double statistic;
    double p_value;
};
UniformityDiagnostic uniformity_diagnostic(std::span<const double> pvalues);

// Total model mass by graded-panel quadrature of cd_eval over [delta, 1-delta]
// plus closed-form tail mass; equals 1 for any valid model.
double cd_quadrature_mass(const CDModel& model, double delta = 1e-6);

} // namespace cdfdr

#endif // CDFDR_SKEWBETA_HPP_
