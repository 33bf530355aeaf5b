#pragma once
// Log-scale hyperbolic helpers. These exist so the length formulas stay
// finite and accurate when cosh/sinh themselves overflow: the minimizer has
// to survive n up to 1e6 and boundary lengths in the hundreds and beyond.

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fricke {

// Direct evaluation is used below this bound on the relevant exponent sum;
// above it everything switches to the log forms.
inline constexpr double kLogDomainThreshold = 300.0;

// log(cosh u). The log1p form has no cancellation anywhere: exp(-2|u|) lies
// in (0, 1] and underflows harmlessly to 0 for large |u|.
inline double log_cosh(double u) {
  u = std::fabs(u);
  return u - std::numbers::ln2 + std::log1p(std::exp(-2.0 * u));
}

// log(sinh u) for u > 0. Near zero the direct form is the accurate one
// (log1p(-exp(-2u)) loses digits there), so switch at u = 1.
inline double log_sinh(double u) {
  if (!(u > 0.0)) throw std::domain_error("log_sinh: argument must be positive");
  if (u < 1.0) return std::log(std::sinh(u));
  return u - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * u));
}

// acosh with full precision near 1 and no overflow for huge arguments.
inline double acosh_stable(double u) {
  if (!(u >= 1.0)) throw std::domain_error("acosh_stable: argument below 1");
  const double d = u - 1.0;
  if (d < 0.5) return std::log1p(d + std::sqrt(d * (d + 2.0)));
  if (u < 1e8) return std::log(u + std::sqrt(u * u - 1.0));
  return std::log(u) + std::numbers::ln2;  // tail error ~ 1/(4u^2)
}

// acosh(u) given lu = log u >= 0. Intended for large lu, where u itself
// would overflow; do not use near lu = 0 (relative accuracy degrades).
inline double acosh_from_log(double lu) {
  if (!(lu >= 0.0)) throw std::domain_error("acosh_from_log: log argument below 0");
  return lu + std::log1p(std::sqrt(-std::expm1(-2.0 * lu)));
}

// asinh(s) given ls = log s, for s > 0. Accurate once ls is moderately
// positive, which is the only regime callers use.
inline double asinh_from_log(double ls) {
  return ls + std::log1p(std::sqrt(1.0 + std::exp(-2.0 * ls)));
}

// log(2 cosh u - 2) for u > 0, via 2 cosh u - 2 = 4 sinh^2(u/2).
inline double log_2cosh_minus_2(double u) {
  return 2.0 * (std::numbers::ln2 + log_sinh(0.5 * u));
}

// |a - b| relative to max(1, |a|, |b|); the comparison metric used by the
// verification suites.
inline double relative_gap(double a, double b) {
  return std::fabs(a - b) / std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
}

}  // namespace fricke
