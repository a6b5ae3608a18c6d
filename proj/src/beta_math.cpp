#include "drift/beta_math.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace drift {

namespace {

constexpr int kMaxFractionTerms = 200;
constexpr int kMaxQuantileSteps = 100;

[[noreturn]] void domain_fail(const std::string& what) {
  throw std::domain_error("beta_math: " + what);
}

// Inverse standard-normal CDF (Acklam's rational approximation, ~1e-9
// relative). Only used to seed the quantile iteration.
double probit(double q) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (q < plow) {
    double u = std::sqrt(-2.0 * std::log(q));
    return (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
           ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  }
  if (q > 1.0 - plow) {
    double u = std::sqrt(-2.0 * std::log(1.0 - q));
    return -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
           ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  }
  double u = q - 0.5;
  double r = u * u;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cont_fraction(double a, double b, double x) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double fpmin = std::numeric_limits<double>::min() / eps;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxFractionTerms; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= eps) return h;
  }
  throw std::runtime_error(
      "beta_math: incomplete beta continued fraction did not converge within " +
      std::to_string(kMaxFractionTerms) + " terms (a=" + std::to_string(a) +
      ", b=" + std::to_string(b) + ", x=" + std::to_string(x) + ")");
}

}  // namespace

BetaParams::BetaParams(double a, double b) : alpha(a), beta(b) {
  if (!(std::isfinite(a) && std::isfinite(b)) || a <= 0.0 || b <= 0.0) {
    domain_fail("shape parameters must be finite and > 0");
  }
}

double BetaParams::variance() const {
  const double s = alpha + beta;
  return alpha * beta / (s * s * (s + 1.0));
}

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) domain_fail("log_gamma requires x > 0");
  // Lanczos approximation, 14 coefficients.
  static const double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
      0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (int j = 0; j < 14; ++j) ser += cof[j] / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

double log_beta(double a, double b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double beta_pdf(const BetaParams& p, double x) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) domain_fail("beta_pdf requires x in [0,1]");
  const double a = p.alpha, b = p.beta;
  if (x == 0.0) {
    if (a > 1.0) return 0.0;
    if (a == 1.0) return std::exp(-log_beta(a, b));
    return std::numeric_limits<double>::infinity();
  }
  if (x == 1.0) {
    if (b > 1.0) return 0.0;
    if (b == 1.0) return std::exp(-log_beta(a, b));
    return std::numeric_limits<double>::infinity();
  }
  return std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_beta(a, b));
}

double beta_cdf(const BetaParams& p, double x) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) domain_fail("beta_cdf requires x in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double a = p.alpha, b = p.beta;
  const double lnfront = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  const double front = std::exp(lnfront);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cont_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_cont_fraction(b, a, 1.0 - x) / b;
}

double beta_quantile(const BetaParams& p, double q) {
  if (!std::isfinite(q) || q <= 0.0 || q >= 1.0) {
    domain_fail("beta_quantile requires q in (0,1)");
  }
  const double mean = p.mean();
  const double sd = std::sqrt(p.variance());
  double x = mean + sd * probit(q);
  double lo = 0.0, hi = 1.0;
  if (x <= lo || x >= hi) x = mean;

  const double ftol = 1e-12;
  for (int it = 0; it < kMaxQuantileSteps; ++it) {
    const double f = beta_cdf(p, x) - q;
    if (f > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    if (std::fabs(f) <= ftol) return x;
    const double dens = beta_pdf(p, x);
    double next;
    if (dens > 0.0 && std::isfinite(dens)) {
      next = x - f / dens;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    } else {
      next = 0.5 * (lo + hi);
    }
    if (next == x) return x;  // bracket exhausted at double resolution
    x = next;
  }
  throw std::runtime_error("beta_math: beta_quantile did not converge within " +
                           std::to_string(kMaxQuantileSteps) + " iterations (alpha=" +
                           std::to_string(p.alpha) + ", beta=" + std::to_string(p.beta) +
                           ", q=" + std::to_string(q) + ")");
}

std::pair<double, double> beta_central_interval(const BetaParams& p, double mass) {
  if (!(mass > 0.0 && mass < 1.0)) domain_fail("interval mass must be in (0,1)");
  const double tail = (1.0 - mass) / 2.0;
  return {beta_quantile(p, tail), beta_quantile(p, 1.0 - tail)};
}

}  // namespace drift
