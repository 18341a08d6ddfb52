#ifndef CDFDR_SPECFUN_HPP_
#define CDFDR_SPECFUN_HPP_

namespace cdfdr::specfun {

// Natural log of the gamma function, x > 0.
double log_gamma(double x);

// log B(a, b) = log_gamma(a) + log_gamma(b) - log_gamma(a + b).
double log_beta(double a, double b);

// Regularized incomplete beta I_x(a, b) for x in [0, 1], a, b > 0.
// Continued fraction with the symmetry switch at x > (a+1)/(a+b+2).
double reg_inc_beta(double x, double a, double b);

// Standard normal density, CDF and quantile.
double normal_pdf(double z);
double normal_cdf(double z);
double normal_quantile(double p);  // p strictly inside (0, 1)

// Student-t CDF with df > 0 degrees of freedom, via reg_inc_beta.
double student_t_cdf(double t, double df);

// Log-density of Beta(a, b) at u in (0, 1).
double beta_log_pdf(double u, double a, double b);
double beta_pdf(double u, double a, double b);

// Digamma psi(x) and trigamma psi'(x), x > 0.
// Recurrence up-shift plus asymptotic expansion; abs error <= 1e-10 for x >= 1e-4.
double digamma(double x);
double trigamma(double x);

} // namespace cdfdr::specfun

#endif // CDFDR_SPECFUN_HPP_
