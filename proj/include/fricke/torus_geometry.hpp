#pragma once
// The length/trace dictionary on a hyperbolic one-holed torus: conversions
// between geodesic lengths and traces, the boundary/commutator relation, a
// report-style point validator, and the right triangle spanned by the a, b
// axes that yields the angle and the altitude H_b.
//
// Conventions: (L_a, L_b, L_ab) are the lengths of the simple closed curves
// a, b, ab; traces are x = 2 cosh(L_a/2) etc.; the boundary length L_bdry
// enters through mu = 2 - 2 cosh(L_bdry/2) <= 0, and a length triple lies on
// the fiber iff x^2 + y^2 + z^2 - x y z = mu.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fricke/stable.hpp"

namespace fricke {

inline double trace_from_length(double L) {
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::domain_error("trace_from_length: length must be positive");
  if (0.5 * L > 709.0)
    throw std::range_error("trace_from_length: trace overflows; work in log scale");
  return 2.0 * std::cosh(0.5 * L);
}

inline double length_from_trace(double t) {
  if (!(t > 2.0))
    throw std::domain_error("length_from_trace: trace must exceed 2");
  return 2.0 * acosh_stable(0.5 * t);
}

inline std::array<double, 3> traces_from_lengths(double L_a, double L_b, double L_ab) {
  return {trace_from_length(L_a), trace_from_length(L_b), trace_from_length(L_ab)};
}

inline std::array<double, 3> lengths_from_traces(double x, double y, double z) {
  return {length_from_trace(x), length_from_trace(y), length_from_trace(z)};
}

inline double mu_from_boundary(double L_boundary) {
  if (!(L_boundary >= 0.0) || !std::isfinite(L_boundary))
    throw std::domain_error("mu_from_boundary: boundary length must be >= 0");
  if (0.5 * L_boundary > 709.0)
    throw std::range_error("mu_from_boundary: mu overflows; work in log scale");
  return 2.0 - 2.0 * std::cosh(0.5 * L_boundary);
}

inline double boundary_from_mu(double mu) {
  if (!(mu <= 0.0))
    throw std::domain_error("boundary_from_mu: mu must be <= 0");
  return 2.0 * acosh_stable(0.5 * (2.0 - mu));
}

struct ValidationReport {
  double x = 0, y = 0, z = 0, mu = 0;  // meaningful on the direct path only
  double residual = 0;      // |x^2+y^2+z^2-xyz-mu|, scaled (see rel_residual) in log mode
  double rel_residual = 0;  // residual / max(1, |xyz|)
  double triangle_slack = 0;  // min slack of the three strict triangle inequalities on (L_a/2, L_b/2, L_ab/2)
  bool accepted = false;
  bool log_domain = false;  // evaluated via log-scale formulas (huge lengths)
  std::string reason;       // empty when accepted
};

// Report-style: never throws. A point is accepted iff the inputs are usable
// lengths and the character relation holds with rel_residual <= 1e-9 and the
// half-length triangle is nondegenerate.
inline ValidationReport validate_point(double L_a, double L_b, double L_ab,
                                       double L_boundary) {
  ValidationReport r;
  const auto fail = [&r](const char* why) {
    r.accepted = false;
    r.reason = why;
    return r;
  };
  if (!(L_a > 0.0) || !(L_b > 0.0) || !(L_ab > 0.0) || !std::isfinite(L_a) ||
      !std::isfinite(L_b) || !std::isfinite(L_ab))
    return fail("curve lengths must be positive and finite");
  if (!(L_boundary >= 0.0) || !std::isfinite(L_boundary))
    return fail("boundary length must be >= 0 and finite");

  const double ha = 0.5 * L_a, hb = 0.5 * L_b, hab = 0.5 * L_ab;
  r.triangle_slack = std::fmin(ha + hb - hab, std::fmin(ha + hab - hb, hb + hab - ha));

  const double big = std::fmax(std::fmax(ha, hb), std::fmax(hab, 0.5 * L_boundary));
  if (big <= kLogDomainThreshold) {
    r.x = 2.0 * std::cosh(ha);
    r.y = 2.0 * std::cosh(hb);
    r.z = 2.0 * std::cosh(hab);
    r.mu = 2.0 - 2.0 * std::cosh(0.5 * L_boundary);
    const double xyz = r.x * r.y * r.z;
    r.residual = std::fabs(r.x * r.x + r.y * r.y + r.z * r.z - xyz - r.mu);
    r.rel_residual = r.residual / std::fmax(1.0, std::fabs(xyz));
  } else {
    // Same relation divided through by xyz, assembled from log-scale pieces:
    //   x/(yz) + y/(xz) + z/(xy) - 1 - mu/(xyz)
    r.log_domain = true;
    const double lx = std::numbers::ln2 + log_cosh(ha);
    const double ly = std::numbers::ln2 + log_cosh(hb);
    const double lz = std::numbers::ln2 + log_cosh(hab);
    double sum = std::exp(lx - ly - lz) + std::exp(ly - lx - lz) +
                 std::exp(lz - lx - ly) - 1.0;
    if (L_boundary > 0.0) {
      const double lmu = log_2cosh_minus_2(0.5 * L_boundary);  // log |mu|
      sum += std::exp(lmu - lx - ly - lz);                     // mu < 0
    }
    r.rel_residual = std::fabs(sum);
    r.residual = r.rel_residual;  // raw residual is not representable here
    r.x = r.y = r.z = r.mu = std::numeric_limits<double>::quiet_NaN();
  }

  if (!(r.rel_residual <= 1e-9))
    return fail("character relation residual exceeds tolerance");
  if (!(r.triangle_slack > 0.0))
    return fail("half-length triangle inequality fails");
  r.accepted = true;
  return r;
}

struct FiberPoint {
  double L_a = 0, L_b = 0, L_ab = 0, L_boundary = 0;
  double x = 0, y = 0, z = 0, mu = 0;
};

// Validating factory; rejects with the report's reason.
inline FiberPoint fiber_point(double L_a, double L_b, double L_ab, double L_boundary) {
  const ValidationReport r = validate_point(L_a, L_b, L_ab, L_boundary);
  if (!r.accepted) throw std::domain_error("fiber_point: " + r.reason);
  if (r.log_domain)
    throw std::range_error("fiber_point: traces overflow; keep such points in log scale");
  return {L_a, L_b, L_ab, L_boundary, r.x, r.y, r.z, r.mu};
}

struct WeierstrassTriangle {
  double theta = 0;  // angle between the a and b axes at their crossing
  double H_b = 0;    // altitude: distance from the crossing to the ab side
};

// Hyperbolic law of cosines on the half-length triangle gives theta; the law
// of sines gives the altitude over the b side. cos(theta) may stick out of
// [-1, 1] by at most 1e-12 of rounding before the data is declared
// inconsistent.
inline WeierstrassTriangle weierstrass(double L_a, double L_b, double L_ab,
                                       double L_boundary) {
  (void)L_boundary;  // part of the point, not of the triangle solve
  if (!(L_a > 0.0) || !(L_b > 0.0) || !(L_ab > 0.0))
    throw std::domain_error("weierstrass: lengths must be positive");
  const double ha = 0.5 * L_a, hb = 0.5 * L_b, hab = 0.5 * L_ab;
  const double sa = std::sinh(ha), sb = std::sinh(hb);
  double c = (std::cosh(ha) * std::cosh(hb) - std::cosh(hab)) / (sa * sb);
  if (std::fabs(c) > 1.0 + 1e-12)
    throw std::domain_error("weierstrass: triple is not a hyperbolic triangle");
  c = std::fmin(1.0, std::fmax(-1.0, c));
  WeierstrassTriangle t;
  t.theta = std::acos(c);
  t.H_b = std::asinh(sa * std::sin(t.theta));
  return t;
}

}  // namespace fricke
