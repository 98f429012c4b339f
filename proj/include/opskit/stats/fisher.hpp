#pragma once

#include <cmath>
#include <string>

#include "opskit/error.hpp"
#include "opskit/stats/special.hpp"

namespace opskit::stats {

struct FisherResult {
  double p1 = 0.0, p2 = 0.0;
  int n1 = 0, n2 = 0;
  double phi1 = 0.0, phi2 = 0.0;  // angular transforms, radians
  double phi_emp = 0.0;
  double alpha = 0.0;
  double phi_crit = 0.0;
  bool significant = false;
};

// Two-proportion angular test: phi = 2 asin(sqrt(p)),
// phi_emp = |phi1 - phi2| * sqrt(n1 n2 / (n1 + n2)), compared against the
// one-sided normal quantile (1.6449 at alpha = 0.05).
inline FisherResult fisher_angular_test(double p1, int n1, double p2, int n2,
                                        double alpha = 0.05) {
  if (!(p1 >= 0.0 && p1 <= 1.0) || !(p2 >= 0.0 && p2 <= 1.0))
    fail(Errc::InvalidProportion, "proportions must lie in [0, 1]");
  if (n1 < 1 || n2 < 1) fail(Errc::InvalidArgument, "sample sizes must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(Errc::InvalidAlpha, "alpha must lie in (0, 1)");

  FisherResult r;
  r.p1 = p1;
  r.p2 = p2;
  r.n1 = n1;
  r.n2 = n2;
  r.alpha = alpha;
  r.phi1 = 2.0 * std::asin(std::sqrt(p1));
  r.phi2 = 2.0 * std::asin(std::sqrt(p2));
  const double dn1 = n1, dn2 = n2;
  r.phi_emp = std::fabs(r.phi1 - r.phi2) * std::sqrt(dn1 * dn2 / (dn1 + dn2));
  r.phi_crit = normal_quantile(1.0 - alpha);
  r.significant = r.phi_emp > r.phi_crit;
  return r;
}

}  // namespace opskit::stats
