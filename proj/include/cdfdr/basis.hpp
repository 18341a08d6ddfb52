#ifndef CDFDR_BASIS_HPP_
#define CDFDR_BASIS_HPP_

#include <functional>
#include <vector>

namespace cdfdr::basis {

// Orthonormal shifted Legendre polynomial Leg_j(u) = sqrt(2j+1) P_j(2u-1)
// on [0, 1], evaluated by the three-term recurrence on P_j.
double legendre_eval(int degree, double u);

// Leg_1(u), ..., Leg_max_degree(u) in one recurrence pass.
std::vector<double> legendre_vector(int max_degree, double u);

// Integral of Leg_j over [0, c]; closed form via the Legendre derivative
// identity (2j+1) P_j = P'_{j+1} - P'_{j-1}. Zero at c = 1 for j >= 1.
double legendre_integral(int degree, double c);

// Brownian bridge covariance kernel min(u,v) - uv on [0,1]^2.
double bb_kernel(double u, double v);

// Gauss-Legendre quadrature rule mapped to [0, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_legendre(int points);

// Shifted Legendre basis of fixed maximal degree with a cached quadrature
// rule. Immutable after construction; safe to share across threads.
class LegendreBasis {
public:
    explicit LegendreBasis(int max_degree = 10, int quadrature_points = 128);

    int max_degree() const { return max_degree_; }
    const QuadratureRule& quadrature() const { return quad_; }

    double eval(int degree, double u) const;
    std::vector<double> eval_all(double u) const;  // degrees 1..max_degree

    // Gram matrix entry <Leg_j, Leg_k> by the cached quadrature.
    double inner_product(int j, int k) const;

private:
    int max_degree_;
    QuadratureRule quad_;
};

// Inner product <K_B(u, .), phi> in the Brownian bridge RKHS, computed as
// int_0^1 d/dt K_B(u,t) phi'(t) dt with Gauss-Legendre panels split at the
// kink t = u. Requires phi(0) = phi(1) = 0; equals phi(u) by the
// reproducing property.
double rkhs_reproduce(double u, const std::function<double(double)>& phi,
                      const std::function<double(double)>& phi_deriv,
                      int quadrature_points);

} // namespace cdfdr::basis

#endif // CDFDR_BASIS_HPP_
