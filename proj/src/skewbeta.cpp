#include "cdfdr/skewbeta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "cdfdr/basis.hpp"
#include "cdfdr/errors.hpp"
#include "cdfdr/specfun.hpp"

namespace cdfdr {

namespace {

struct LogMoments {
    double mean_log_u;
    double mean_log_1mu;
    double mean;
    double var;
    std::size_t n;
};

LogMoments log_moments(std::span<const double> p) {
    if (p.size() < 10)
        throw estimation_error("fit_beta_mle: need at least 10 p-values");
    double s1 = 0.0, s2 = 0.0, sm = 0.0, sq = 0.0;
    for (double u : p) {
        if (!std::isfinite(u) || u <= 0.0 || u >= 1.0)
            throw domain_error("fit_beta_mle: values must lie strictly inside (0, 1)");
        s1 += std::log(u);
        s2 += std::log1p(-u);
        sm += u;
        sq += u * u;
    }
    const double n = static_cast<double>(p.size());
    const double mean = sm / n;
    const double var = std::max(sq / n - mean * mean, 0.0);
    return {s1 / n, s2 / n, mean, var, p.size()};
}

// Normalized score of the beta log-likelihood.
void beta_score(double a, double b, const LogMoments& m, double& g1, double& g2) {
    const double dab = specfun::digamma(a + b);
    g1 = dab - specfun::digamma(a) + m.mean_log_u;
    g2 = dab - specfun::digamma(b) + m.mean_log_1mu;
}

double loglik_from_moments(double a, double b, const LogMoments& m) {
    return static_cast<double>(m.n) * ((a - 1.0) * m.mean_log_u +
                                       (b - 1.0) * m.mean_log_1mu -
                                       specfun::log_beta(a, b));
}

// Golden-section maximization of the profile over one coordinate.
double golden_max(const std::function<double(double)>& f, double lo, double hi, int iters) {
    const double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

double series_factor(const CDModel& model, double v) {
    if (model.coefficients.empty()) return 1.0;
    int top = 0;
    for (const auto& c : model.coefficients) top = std::max(top, c.degree);
    const std::vector<double> leg = basis::legendre_vector(top, v);
    double s = 1.0;
    for (const auto& c : model.coefficients)
        s += c.value * leg[static_cast<std::size_t>(c.degree - 1)];
    return s;
}

} // namespace

double beta_loglik(std::span<const double> pvalues, double alpha, double beta) {
    return loglik_from_moments(alpha, beta, log_moments(pvalues));
}

BetaParams fit_beta_mle(std::span<const double> pvalues, double tol, int max_iter) {
    const LogMoments m = log_moments(pvalues);
    if (m.var <= 0.0)
        throw estimation_error("fit_beta_mle: degenerate input with zero variance");

    // Method-of-moments start.
    double t = m.mean * (1.0 - m.mean) / m.var - 1.0;
    if (!(t > 0.0)) t = 0.01;
    double a = std::clamp(m.mean * t, 1e-2, 1e6);
    double b = std::clamp((1.0 - m.mean) * t, 1e-2, 1e6);

    bool converged = false;
    double g1 = 0.0, g2 = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        beta_score(a, b, m, g1, g2);
        if (std::max(std::fabs(g1), std::fabs(g2)) <= tol) {
            converged = true;
            break;
        }
        const double tab = specfun::trigamma(a + b);
        const double h11 = tab - specfun::trigamma(a);
        const double h12 = tab;
        const double h22 = tab - specfun::trigamma(b);
        const double det = h11 * h22 - h12 * h12;
        if (det == 0.0 || !std::isfinite(det)) break;
        double da = -(h22 * g1 - h12 * g2) / det;
        double db = -(h11 * g2 - h12 * g1) / det;
        double step = 1.0;
        while (a + step * da <= 0.0 || b + step * db <= 0.0) step *= 0.5;
        a += step * da;
        b += step * db;
    }

    if (!converged) {
        // Coordinate-wise golden-section search on the log-likelihood.
        for (int sweep = 0; sweep < 200; ++sweep) {
            const double b_fix = b;
            a = golden_max([&](double aa) { return loglik_from_moments(aa, b_fix, m); },
                           std::max(a / 50.0, 1e-6), a * 50.0, 60);
            const double a_fix = a;
            b = golden_max([&](double bb) { return loglik_from_moments(a_fix, bb, m); },
                           std::max(b / 50.0, 1e-6), b * 50.0, 60);
            beta_score(a, b, m, g1, g2);
            if (std::max(std::fabs(g1), std::fabs(g2)) <= tol) {
                converged = true;
                break;
            }
        }
    }
    if (!converged)
        throw estimation_error("fit_beta_mle: no convergence; last iterate alpha=" +
                               std::to_string(a) + " beta=" + std::to_string(b));

    BetaParams params;
    params.alpha = a;
    params.beta = b;
    params.loglik = loglik_from_moments(a, b, m);
    return params;
}

std::vector<double> smooth_pvalues(std::span<const double> pvalues, const BetaParams& params) {
    std::vector<double> v(pvalues.size());
    for (std::size_t i = 0; i < pvalues.size(); ++i)
        v[i] = specfun::reg_inc_beta(pvalues[i], params.alpha, params.beta);
    return v;
}

std::vector<double> lp_coefficients(std::span<const double> smooth_values, int max_degree) {
    if (smooth_values.empty())
        throw estimation_error("lp_coefficients: empty input");
    if (max_degree < 1)
        throw domain_error("lp_coefficients: max_degree must be >= 1");
    std::vector<double> sums(static_cast<std::size_t>(max_degree), 0.0);
    for (double v : smooth_values) {
        const std::vector<double> leg = basis::legendre_vector(max_degree, v);
        for (int j = 0; j < max_degree; ++j) sums[static_cast<std::size_t>(j)] += leg[static_cast<std::size_t>(j)];
    }
    const double n = static_cast<double>(smooth_values.size());
    for (double& s : sums) s /= n;
    return sums;
}

std::vector<LpCoefficient> select_coefficients(std::span<const double> raw, std::size_t n,
                                               int max_degree) {
    if (n < 2) throw estimation_error("select_coefficients: need n >= 2");
    const int m = std::min<int>(max_degree, static_cast<int>(raw.size()));
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        const double si = raw[static_cast<std::size_t>(i)] * raw[static_cast<std::size_t>(i)];
        const double sj = raw[static_cast<std::size_t>(j)] * raw[static_cast<std::size_t>(j)];
        if (si != sj) return si > sj;
        return i < j;  // ties toward the lower degree
    });

    const double penalty = std::log(static_cast<double>(n)) / static_cast<double>(n);
    double best = 0.0;  // k = 0: uniform model
    int best_k = 0;
    double csum = 0.0;
    for (int k = 1; k <= m; ++k) {
        const double c = raw[static_cast<std::size_t>(order[static_cast<std::size_t>(k - 1)])];
        csum += c * c;
        const double value = csum - static_cast<double>(k) * penalty;
        if (value > best) {
            best = value;
            best_k = k;
        }
    }

    std::vector<LpCoefficient> out;
    out.reserve(static_cast<std::size_t>(best_k));
    for (int i = 0; i < best_k; ++i) {
        const int idx = order[static_cast<std::size_t>(i)];
        out.push_back({idx + 1, raw[static_cast<std::size_t>(idx)]});
    }
    std::sort(out.begin(), out.end(),
              [](const LpCoefficient& x, const LpCoefficient& y) { return x.degree < y.degree; });
    return out;
}

double cd_eval(const CDModel& model, double u) {
    if (!std::isfinite(u) || u <= 0.0 || u >= 1.0)
        throw domain_error("cd_eval: u must lie strictly inside (0, 1), got " +
                           std::to_string(u));
    const double a = model.beta_params.alpha;
    const double b = model.beta_params.beta;
    const double fb = specfun::beta_pdf(u, a, b);
    const double v = specfun::reg_inc_beta(u, a, b);
    return fb * series_factor(model, v);
}

double cd_eval_clipped(const CDModel& model, double u, double floor) {
    return std::max(cd_eval(model, u), floor);
}

double null_adjusted_density(const CDModel& model, double z) {
    if (!model.null)
        throw domain_error("null_adjusted_density: model carries no null model");
    const double u = specfun::normal_cdf((z - model.null->mu0) / model.null->sigma0);
    return cd_eval(model, u);
}

double null_adjusted_density_clipped(const CDModel& model, double z, double floor) {
    if (!model.null)
        throw domain_error("null_adjusted_density: model carries no null model");
    double u = specfun::normal_cdf((z - model.null->mu0) / model.null->sigma0);
    u = std::clamp(u, std::numeric_limits<double>::min(),
                   std::nextafter(1.0, 0.0));
    return std::max(cd_eval(model, u), floor);
}

double deviance(std::span<const LpCoefficient> coefficients) {
    double s = 0.0;
    for (const auto& c : coefficients) s += c.value * c.value;
    return s;
}

UniformityDiagnostic uniformity_diagnostic(std::span<const double> pvalues) {
    const BetaParams fit = fit_beta_mle(pvalues);
    // l(1,1) = 0, so the LRT statistic is just twice the fitted log-likelihood.
    const double stat = std::max(2.0 * fit.loglik, 0.0);
    const double p = std::exp(-0.5 * stat);  // chi-square survival, 2 df
    return {stat, std::clamp(p, std::numeric_limits<double>::min(),
                             std::nextafter(1.0, 0.0))};
}

double cd_quadrature_mass(const CDModel& model, double delta) {
    if (!(delta > 0.0) || delta >= 0.25)
        throw domain_error("cd_quadrature_mass: delta must lie in (0, 0.25)");
    const double a = model.beta_params.alpha;
    const double b = model.beta_params.beta;

    static const basis::QuadratureRule rule = basis::gauss_legendre(16);
    auto integrate_panel = [&](double lo, double hi) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            s += rule.weights[i] * cd_eval(model, lo + (hi - lo) * rule.nodes[i]);
        return (hi - lo) * s;
    };

    // Panels graded geometrically toward both endpoints.
    double mass = 0.0;
    double lo = delta;
    while (lo < 0.5) {
        const double hi = std::min(lo * 2.0, 0.5);
        mass += integrate_panel(lo, hi);
        lo = hi;
    }
    double hi_edge = 1.0 - delta;
    while (hi_edge > 0.5) {
        const double lo_edge = std::max(1.0 - 2.0 * (1.0 - hi_edge), 0.5);
        mass += integrate_panel(lo_edge, hi_edge);
        hi_edge = lo_edge;
    }

    // Closed-form tail mass of the model below delta and above 1-delta.
    const double c0 = specfun::reg_inc_beta(delta, a, b);
    const double c1 = specfun::reg_inc_beta(1.0 - delta, a, b);
    double tail0 = c0;
    double tail1 = 1.0 - c1;
    for (const auto& c : model.coefficients) {
        tail0 += c.value * basis::legendre_integral(c.degree, c0);
        tail1 -= c.value * basis::legendre_integral(c.degree, c1);
    }
    return mass + tail0 + tail1;
}

} // namespace cdfdr
