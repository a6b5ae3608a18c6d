#pragma once

#include <utility>

namespace drift {

// Shape parameters of a beta distribution, acting as pseudo-counts of
// misclassified (alpha) and correctly classified (beta) instances.
struct BetaParams {
  double alpha;
  double beta;

  BetaParams(double a, double b);

  double mean() const { return alpha / (alpha + beta); }
  double variance() const;
};

// Natural log of the gamma function for x > 0.
// Throws std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a+b).
double log_beta(double a, double b);

// Density of Beta(alpha, beta) at x in [0, 1]. Unbounded endpoints (shape
// parameter < 1) return +infinity.
double beta_pdf(const BetaParams& p, double x);

// Regularized incomplete beta function I_x(alpha, beta), i.e. the CDF.
// Evaluated by continued fraction with the symmetry switch at
// x > (a+1)/(a+b+2). Throws std::runtime_error if the fraction fails to
// converge within its iteration budget.
double beta_cdf(const BetaParams& p, double x);

// Inverse CDF: the x with beta_cdf(p, x) = q, for q in (0, 1).
// Newton iteration from a normal-approximation seed with a maintained
// bisection bracket; throws std::runtime_error on non-convergence.
double beta_quantile(const BetaParams& p, double q);

// Central interval [lo, hi] containing `mass` of the distribution:
// quantiles at (1 -/+ mass)/2.
std::pair<double, double> beta_central_interval(const BetaParams& p, double mass);

}  // namespace drift
