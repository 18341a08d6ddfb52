#include "cdfdr/basis.hpp"

#include <cmath>
#include <string>

#include "cdfdr/errors.hpp"

namespace cdfdr::basis {

namespace {

void require_unit_interval(double u, const char* fn) {
    if (!std::isfinite(u) || u < 0.0 || u > 1.0)
        throw domain_error(std::string(fn) + ": argument must lie in [0, 1], got " +
                           std::to_string(u));
}

// Plain Legendre P_j(x) on [-1, 1].
double legendre_p(int degree, double x) {
    if (degree == 0) return 1.0;
    double pkm1 = 1.0;
    double pk = x;
    for (int k = 1; k < degree; ++k) {
        const double pkp1 = ((2 * k + 1) * x * pk - k * pkm1) / (k + 1);
        pkm1 = pk;
        pk = pkp1;
    }
    return pk;
}

} // namespace

double legendre_eval(int degree, double u) {
    if (degree < 0) throw domain_error("legendre_eval: degree must be >= 0");
    require_unit_interval(u, "legendre_eval");
    return std::sqrt(2.0 * degree + 1.0) * legendre_p(degree, 2.0 * u - 1.0);
}

std::vector<double> legendre_vector(int max_degree, double u) {
    if (max_degree < 1) throw domain_error("legendre_vector: max_degree must be >= 1");
    require_unit_interval(u, "legendre_vector");
    const double x = 2.0 * u - 1.0;
    std::vector<double> out(static_cast<std::size_t>(max_degree));
    double pkm1 = 1.0;
    double pk = x;
    for (int j = 1; j <= max_degree; ++j) {
        out[static_cast<std::size_t>(j - 1)] = std::sqrt(2.0 * j + 1.0) * pk;
        const double pkp1 = ((2 * j + 1) * x * pk - j * pkm1) / (j + 1);
        pkm1 = pk;
        pk = pkp1;
    }
    return out;
}

double legendre_integral(int degree, double c) {
    if (degree < 0) throw domain_error("legendre_integral: degree must be >= 0");
    require_unit_interval(c, "legendre_integral");
    if (degree == 0) return c;
    // int_0^c Leg_j = [P_{j+1}(y) - P_{j-1}(y)] / (2 sqrt(2j+1)),  y = 2c - 1;
    // the lower boundary term vanishes since P_{j+1}(-1) = P_{j-1}(-1).
    const double y = 2.0 * c - 1.0;
    return (legendre_p(degree + 1, y) - legendre_p(degree - 1, y)) /
           (2.0 * std::sqrt(2.0 * degree + 1.0));
}

double bb_kernel(double u, double v) {
    require_unit_interval(u, "bb_kernel");
    require_unit_interval(v, "bb_kernel");
    return std::min(u, v) - u * v;
}

QuadratureRule gauss_legendre(int points) {
    if (points < 1) throw domain_error("gauss_legendre: need at least one point");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(points));
    rule.weights.resize(static_cast<std::size_t>(points));
    const int m = (points + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_n from the Chebyshev-based initial guess.
        double x = std::cos(M_PI * (i + 0.75) / (points + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double pkm1 = 1.0, pk = x;
            for (int k = 1; k < points; ++k) {
                const double pkp1 = ((2 * k + 1) * x * pk - k * pkm1) / (k + 1);
                pkm1 = pk;
                pk = pkp1;
            }
            dp = points * (x * pk - pkm1) / (x * x - 1.0);
            const double dx = pk / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map [-1, 1] -> [0, 1].
        rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);
        rule.weights[static_cast<std::size_t>(i)] = 0.5 * w;
        rule.nodes[static_cast<std::size_t>(points - 1 - i)] = 0.5 * (1.0 + x);
        rule.weights[static_cast<std::size_t>(points - 1 - i)] = 0.5 * w;
    }
    return rule;
}

LegendreBasis::LegendreBasis(int max_degree, int quadrature_points)
    : max_degree_(max_degree), quad_(gauss_legendre(quadrature_points)) {
    if (max_degree < 1) throw domain_error("LegendreBasis: max_degree must be >= 1");
}

double LegendreBasis::eval(int degree, double u) const {
    return legendre_eval(degree, u);
}

std::vector<double> LegendreBasis::eval_all(double u) const {
    return legendre_vector(max_degree_, u);
}

double LegendreBasis::inner_product(int j, int k) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < quad_.nodes.size(); ++i)
        sum += quad_.weights[i] * legendre_eval(j, quad_.nodes[i]) *
               legendre_eval(k, quad_.nodes[i]);
    return sum;
}

double rkhs_reproduce(double u, const std::function<double(double)>& phi,
                      const std::function<double(double)>& phi_deriv,
                      int quadrature_points) {
    if (!std::isfinite(u) || u <= 0.0 || u >= 1.0)
        throw domain_error("rkhs_reproduce: u must lie strictly inside (0, 1)");
    if (quadrature_points < 64)
        throw domain_error("rkhs_reproduce: need at least 64 quadrature points");
    if (std::fabs(phi(0.0)) > 1e-9 || std::fabs(phi(1.0)) > 1e-9)
        throw domain_error("rkhs_reproduce: test function must vanish at 0 and 1");

    // d/dt K_B(u,t) = (1 - u) on t < u and -u on t > u.
    const QuadratureRule rule = gauss_legendre(quadrature_points);
    double left = 0.0, right = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        left += rule.weights[i] * phi_deriv(u * rule.nodes[i]);
        right += rule.weights[i] * phi_deriv(u + (1.0 - u) * rule.nodes[i]);
    }
    left *= u;            // int_0^u phi'
    right *= 1.0 - u;     // int_u^1 phi'
    return (1.0 - u) * left - u * right;
}

} // namespace cdfdr::basis
