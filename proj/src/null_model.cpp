#include "cdfdr/null_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cdfdr/errors.hpp"
#include "cdfdr/specfun.hpp"

namespace cdfdr {

namespace {

double median_of(std::vector<double> v) {
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double m = v[mid];
    if (n % 2 == 0) {
        const double lo =
            *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
        m = 0.5 * (m + lo);
    }
    return m;
}

// MAD about zero, scaled to be consistent for the normal.
double mad_scale(const std::vector<double>& residuals) {
    std::vector<double> abs(residuals.size());
    for (std::size_t i = 0; i < residuals.size(); ++i) abs[i] = std::fabs(residuals[i]);
    return median_of(std::move(abs)) / 0.6745;
}

} // namespace

double biweight_psi(double z, double k) {
    if (!(k > 0.0)) throw domain_error("biweight_psi: k must be > 0");
    if (std::fabs(z) > k) return 0.0;
    const double t = z / k;
    const double w = 1.0 - t * t;
    return z * w * w;
}

double biweight_rho(double z, double k) {
    if (!(k > 0.0)) throw domain_error("biweight_rho: k must be > 0");
    const double c = k * k / 6.0;
    if (std::fabs(z) >= k) return c;
    const double w = 1.0 - (z / k) * (z / k);
    return c * (1.0 - w * w * w);
}

NullModel fit_empirical_null(std::span<const double> zscores, double tuning_k, double tol,
                             int max_iter, std::vector<IrlsIteration>* trace) {
    const std::size_t n = zscores.size();
    if (n < 10) throw estimation_error("fit_empirical_null: need at least 10 z-scores");
    if (!(tuning_k > 0.0)) throw domain_error("fit_empirical_null: tuning_k must be > 0");

    std::vector<double> z(zscores.begin(), zscores.end());
    for (double v : z)
        if (!std::isfinite(v))
            throw estimation_error("fit_empirical_null: non-finite z-score");
    std::sort(z.begin(), z.end());
    if (z.front() == z.back())
        throw estimation_error("fit_empirical_null: degenerate data with zero spread");

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = specfun::normal_quantile((static_cast<double>(i) + 0.5) /
                                        static_cast<double>(n));

    // Robust start: location = median, scale = MAD/0.6745.
    double mu = median_of(z);
    std::vector<double> dev(n);
    for (std::size_t i = 0; i < n; ++i) dev[i] = z[i] - mu;
    double sigma = mad_scale(dev);
    if (sigma <= 0.0) sigma = (z.back() - z.front()) / 4.0;

    NullModel model;
    model.tuning_k = tuning_k;
    model.converged = false;

    std::vector<double> r(n);
    int it = 0;
    for (; it < max_iter; ++it) {
        for (std::size_t i = 0; i < n; ++i) r[i] = z[i] - mu - sigma * x[i];
        const double s = mad_scale(r);
        if (trace) trace->push_back({mu, sigma, s});
        if (s < 1e-14 * (1.0 + std::fabs(sigma))) {
            model.converged = true;  // exact fit
            break;
        }

        double sw = 0.0, swx = 0.0, swy = 0.0, swxx = 0.0, swxy = 0.0;
        std::size_t active = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double t = r[i] / s;
            if (std::fabs(t) >= tuning_k) continue;
            const double u = 1.0 - (t / tuning_k) * (t / tuning_k);
            const double w = u * u;
            ++active;
            sw += w;
            swx += w * x[i];
            swy += w * z[i];
            swxx += w * x[i] * x[i];
            swxy += w * x[i] * z[i];
        }
        if (active < 4)
            throw estimation_error(
                "fit_empirical_null: fewer than 4 points with positive weight");
        const double det = sw * swxx - swx * swx;
        if (det <= 0.0 || !std::isfinite(det))
            throw estimation_error("fit_empirical_null: singular weighted design");
        const double mu_new = (swxx * swy - swx * swxy) / det;
        const double sigma_new = (sw * swxy - swx * swy) / det;
        const double step = std::max(std::fabs(mu_new - mu), std::fabs(sigma_new - sigma));
        mu = mu_new;
        sigma = sigma_new;
        if (step < tol) {
            ++it;
            model.converged = true;
            break;
        }
    }
    if (sigma <= 0.0)
        throw estimation_error("fit_empirical_null: non-positive scale estimate");

    model.mu0 = mu;
    model.sigma0 = sigma;
    model.iterations = it;
    return model;
}

double z_from_t(double t, double df, bool* clamped) {
    if (!std::isfinite(t)) throw domain_error("z_from_t: non-finite t");
    double p = specfun::student_t_cdf(t, df);
    const double lo = 1e-15;
    bool hit = false;
    if (p < lo) {
        p = lo;
        hit = true;
    } else if (p > 1.0 - lo) {
        p = 1.0 - lo;
        hit = true;
    }
    if (clamped) *clamped = hit;
    return specfun::normal_quantile(p);
}

std::vector<double> pvalues_from_z(std::span<const double> zscores, const NullModel& null,
                                   Sided sided) {
    if (!(null.sigma0 > 0.0))
        throw domain_error("pvalues_from_z: null model has non-positive scale");
    const std::size_t n = zscores.size();
    const double eps = 1.0 / (10.0 * static_cast<double>(std::max<std::size_t>(n, 1)));
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = (zscores[i] - null.mu0) / null.sigma0;
        double v;
        switch (sided) {
            case Sided::left: v = specfun::normal_cdf(s); break;
            case Sided::right: v = specfun::normal_cdf(-s); break;
            default: v = 2.0 * specfun::normal_cdf(-std::fabs(s)); break;
        }
        p[i] = std::clamp(v, eps, 1.0 - eps);
    }
    return p;
}

} // namespace cdfdr
