#pragma once

#include <cmath>
#include <string>

#include "opskit/error.hpp"

namespace opskit::stats {

// Regularized lower incomplete gamma P(a, x): power series for x < a + 1,
// modified Lentz continued fraction for the upper tail otherwise.
inline double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0))
    fail(Errc::InvalidArgument, "regularized_gamma_p needs a > 0 and x >= 0");
  if (x == 0.0) return 0.0;
  const double log_gamma_a = std::lgamma(a);
  const double prefactor = std::exp(a * std::log(x) - x - log_gamma_a);

  if (x < a + 1.0) {
    double term = 1.0 / a;
    double sum = term;
    double denom = a;
    for (int i = 0; i < 1000; ++i) {
      denom += 1.0;
      term *= x / denom;
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return prefactor * sum;
  }

  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 - prefactor * h;
}

inline double chi_square_cdf(double x, int df) {
  if (df < 1) fail(Errc::InvalidArgument, "degrees of freedom must be >= 1");
  if (x <= 0.0) return 0.0;
  return regularized_gamma_p(df / 2.0, x / 2.0);
}

inline double chi_square_pdf(double x, int df) {
  if (df < 1) fail(Errc::InvalidArgument, "degrees of freedom must be >= 1");
  if (x <= 0.0) return 0.0;
  const double half_df = df / 2.0;
  return std::exp((half_df - 1.0) * std::log(x) - x / 2.0 - half_df * std::log(2.0) -
                  std::lgamma(half_df));
}

// Upper critical value: the x with P[X > x] = alpha for X ~ chi-square(df).
// Bisection brackets the root, a short Newton run polishes it.
inline double chi_square_critical(int df, double alpha) {
  if (df < 1) fail(Errc::InvalidArgument, "degrees of freedom must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(Errc::InvalidAlpha, "alpha must lie in (0, 1)");

  const double target = 1.0 - alpha;  // lower-tail probability at the root
  double lo = 0.0;
  double hi = df + 10.0 * std::sqrt(2.0 * static_cast<double>(df)) + 20.0;
  while (chi_square_cdf(hi, df) < target) hi *= 2.0;
  while (hi - lo > 1e-9 * (1.0 + lo)) {
    const double mid = 0.5 * (lo + hi);
    (chi_square_cdf(mid, df) < target ? lo : hi) = mid;
  }

  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 12; ++i) {
    const double f = chi_square_cdf(x, df) - target;
    const double slope = chi_square_pdf(x, df);
    if (slope <= 0.0) break;
    const double step = f / slope;
    x -= step;
    if (x <= 0.0) x = 0.5 * (x + step);  // stay in the domain
    if (std::fabs(step) <= 1e-12 * x) break;
  }
  return x;
}

// Standard normal quantile via Acklam's rational approximation plus one
// Halley refinement against erfc; absolute error is far below 1e-8.
inline double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) fail(Errc::InvalidAlpha, "probability must lie in (0, 1)");

  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  return x - u / (1.0 + x * u / 2.0);
}

}  // namespace opskit::stats
