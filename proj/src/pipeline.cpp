#include "cdfdr/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "cdfdr/errors.hpp"
#include "cdfdr/specfun.hpp"

namespace cdfdr {

std::vector<double> clamp_unit(std::span<const double> values) {
    const std::size_t n = values.size();
    const double eps = 1.0 / (10.0 * static_cast<double>(std::max<std::size_t>(n, 1)));
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::clamp(values[i], eps, 1.0 - eps);
    return out;
}

FitResult fit_pipeline(std::span<const double> values, InputKind kind,
                       const FitOptions& options, std::optional<double> df) {
    FitResult result;
    std::vector<double> z;

    switch (kind) {
        case InputKind::p: {
            for (double v : values)
                if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                    throw domain_error("fit_pipeline: p-values must lie in [0, 1]");
            result.u = clamp_unit(values);
            break;
        }
        case InputKind::t: {
            if (!df) throw domain_error("fit_pipeline: t input requires degrees of freedom");
            z.resize(values.size());
            for (std::size_t i = 0; i < values.size(); ++i) z[i] = z_from_t(values[i], *df);
            break;
        }
        case InputKind::z:
            z.assign(values.begin(), values.end());
            break;
    }

    if (kind != InputKind::p) {
        NullModel null;
        if (options.null_kind == NullKind::empirical)
            null = fit_empirical_null(z);
        result.model.null = null;
        // PIT through the fitted null; the comparison density lives on this scale.
        std::vector<double> pit(z.size());
        for (std::size_t i = 0; i < z.size(); ++i)
            pit[i] = specfun::normal_cdf((z[i] - null.mu0) / null.sigma0);
        result.u = clamp_unit(pit);
    }

    result.model.n = result.u.size();
    result.model.max_degree = options.max_degree;
    result.model.beta_params = fit_beta_mle(result.u);
    {
        const double ll = result.model.beta_params.loglik;
        const double stat = std::max(2.0 * ll, 0.0);
        result.diagnostic.statistic = stat;
        result.diagnostic.p_value = std::clamp(std::exp(-0.5 * stat),
                                               std::numeric_limits<double>::min(),
                                               std::nextafter(1.0, 0.0));
    }
    const std::vector<double> smooth = smooth_pvalues(result.u, result.model.beta_params);
    const std::vector<double> raw = lp_coefficients(smooth, options.max_degree);
    result.model.coefficients = select_coefficients(raw, result.u.size(), options.max_degree);

    if (options.estimate_pi0) {
        result.pi0 = mdc_pi0(result.u, result.model, options.gamma, options.grid_step,
                             options.mdc_degree);
        result.model.pi0 = std::min(result.pi0.pi0, 1.0);
    }
    return result;
}

} // namespace cdfdr
