#ifndef CDFDR_PIPELINE_HPP_
#define CDFDR_PIPELINE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "cdfdr/null_model.hpp"
#include "cdfdr/pi0.hpp"
#include "cdfdr/skewbeta.hpp"

namespace cdfdr {

enum class InputKind { z, p, t };
enum class NullKind { theoretical, empirical };

struct FitOptions {
    NullKind null_kind = NullKind::empirical;  // z/t inputs only
    int max_degree = 10;
    double gamma = 3.5;        // MDC grid upper end
    double grid_step = 0.01;   // MDC grid step
    int mdc_degree = 10;       // M used by the deviance
    bool estimate_pi0 = true;
};

struct FitResult {
    CDModel model;
    std::vector<double> u;  // values the model was fitted on: clamped p-values,
                            // or the null PIT F0(z) for z/t inputs
    Pi0Estimate pi0;
    UniformityDiagnostic diagnostic;
};

// Clamp values into [eps, 1-eps], eps = 1/(10N).
std::vector<double> clamp_unit(std::span<const double> values);

// Full estimation pipeline: (empirical or theoretical) null for z-scores,
// comparison-density transform u = F0(z), beta MLE, smooth p-values, LP
// coefficients with Schwarz selection, and the MDC pi0 estimate. For p-value
// input the null step is skipped and u is the clamped p-value itself.
FitResult fit_pipeline(std::span<const double> values, InputKind kind,
                       const FitOptions& options = {},
                       std::optional<double> df = std::nullopt);

} // namespace cdfdr

#endif // CDFDR_PIPELINE_HPP_
