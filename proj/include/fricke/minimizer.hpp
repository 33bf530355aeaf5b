#pragma once
// Geodesic length of a^2 b^n over the fiber of fixed boundary length, and its
// explicit minimum.
//
// On the symmetric locus the length is
//   L(L_b) = 4 asinh( cosh(L_bdry/4) cosh(n L_b/4) / sinh(L_b/2) ),
// a strictly unimodal function of L_b. The minimizing L_b* is the unique
// positive root of
//   (n/2) tanh(n L_b/4) tanh(L_b/2) = 1,
// independent of the boundary length, and the minimum value satisfies
//   sinh(L_min/4) = (n/2) cosh(L_bdry/4) sinh(n L_b*/4) / cosh(L_b*/2).
// As n grows, n L_b*/4 decreases to the root t* of t tanh t = 1.
//
// Everything here has a direct and a log-scale evaluation path; the switch
// is the shared kLogDomainThreshold on the exponent sum.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fricke/holonomy.hpp"
#include "fricke/stable.hpp"
#include "fricke/torus_geometry.hpp"

namespace fricke {

// Root of t tanh t = 1 to double precision; used only to seed brackets.
// solve_t_star recomputes it from scratch.
inline constexpr double kTStarSeed = 1.1996786402577734;

// Length of the a^2 b^n geodesic at the symmetric point with given L_b.
// n = 2 is allowed for cross-checks against the trace identities, though the
// minimization story needs n >= 3 (a^2 b^2 is not filling).
inline double length_a2bn(double L_b, double L_boundary, long long n) {
  if (!(L_b > 0.0) || !std::isfinite(L_b))
    throw std::invalid_argument("length_a2bn: L_b must be positive");
  if (!(L_boundary >= 0.0) || !std::isfinite(L_boundary))
    throw std::invalid_argument("length_a2bn: boundary length must be >= 0");
  if (n < 2) throw std::invalid_argument("length_a2bn: n must be >= 2");
  const double u = 0.25 * L_boundary;
  const double v = 0.25 * static_cast<double>(n) * L_b;
  const double h = 0.5 * L_b;
  if (u + v > kLogDomainThreshold) {
    const double logS = log_cosh(u) + log_cosh(v) - log_sinh(h);
    return 4.0 * asinh_from_log(logS);
  }
  return 4.0 * std::asinh(std::cosh(u) * std::cosh(v) / std::sinh(h));
}

namespace detail {

// Safeguarded Newton on a strictly increasing function: the bracket is
// maintained by sign, steps leaving it fall back to bisection, and the stop
// rule is on the residual, not the abscissa.
template <class F, class DF>
double newton_increasing(F f, DF df, double lo, double hi, double x0, double tol,
                         const char* who) {
  double flo = f(lo), fhi = f(hi);
  if (!(flo < 0.0 && fhi > 0.0))
    throw std::logic_error(std::string(who) + ": initial bracket does not straddle the root");
  double x = std::clamp(x0, lo, hi);
  double best_x = x, best_f = std::fabs(f(x));
  for (int it = 0; it < 200; ++it) {
    const double fx = f(x);
    if (std::fabs(fx) < best_f) {
      best_f = std::fabs(fx);
      best_x = x;
    }
    if (std::fabs(fx) <= tol) return x;
    if (fx > 0.0)
      hi = x;
    else
      lo = x;
    double xn = x - fx / df(x);
    if (!std::isfinite(xn) || !(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (xn == x) xn = 0.5 * (lo + hi);  // Newton stalled at double resolution
    if (xn == x) break;
    x = xn;
  }
  // The abscissa cannot move any further; report the smallest residual seen.
  return best_x;
}

}  // namespace detail

struct TStar {
  double value = 0;
  double residual = 0;  // t tanh t - 1 at the returned value
};

// The limit constant: unique positive root of t tanh t = 1.
inline TStar solve_t_star(double tol = 1e-15) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_t_star: tol must be positive");
  auto g = [](double t) { return t * std::tanh(t) - 1.0; };
  auto dg = [](double t) {
    const double c = std::cosh(t);
    return std::tanh(t) + t / (c * c);
  };
  TStar r;
  r.value = detail::newton_increasing(g, dg, 1.0, 1.5, 1.2, tol, "solve_t_star");
  r.residual = g(r.value);
  return r;
}

// The minimizing L_b for given n: unique positive root of
// (n/2) tanh(n L/4) tanh(L/2) - 1. Does not depend on the boundary length.
inline double solve_lb_star(long long n, double tol = 1e-14) {
  if (n < 3) throw std::invalid_argument("solve_lb_star: n must be >= 3");
  if (!(tol > 0.0)) throw std::invalid_argument("solve_lb_star: tol must be positive");
  const double nd = static_cast<double>(n);
  auto f = [nd](double L) {
    return 0.5 * nd * std::tanh(0.25 * nd * L) * std::tanh(0.5 * L) - 1.0;
  };
  auto df = [nd](double L) {
    const double cv = std::cosh(0.25 * nd * L), ch = std::cosh(0.5 * L);
    return 0.5 * nd * (0.25 * nd * std::tanh(0.5 * L) / (cv * cv) +
                       0.5 * std::tanh(0.25 * nd * L) / (ch * ch));
  };
  // Half the asymptotic root from below, 8/n + 2 from above; both signs are
  // guaranteed analytically and asserted by newton_increasing.
  const double lo = 2.0 * kTStarSeed / nd;
  const double hi = 8.0 / nd + 2.0;
  return detail::newton_increasing(f, df, lo, hi, 4.0 * kTStarSeed / nd, tol,
                                   "solve_lb_star");
}

// Residual of the root equation at L; what solve_lb_star drives to ~1e-15.
inline double lb_star_residual(long long n, double L) {
  const double nd = static_cast<double>(n);
  return 0.5 * nd * std::tanh(0.25 * nd * L) * std::tanh(0.5 * L) - 1.0;
}

struct ReconstructedPoint {
  double L_a = 0, L_b = 0, L_ab = 0;
  double H_b = 0;
  bool log_domain = false;   // lengths came from log-scale closed forms
  ValidationReport validation;
};

// Rebuilds the full minimum point from (n, L_b*, L_bdry): the altitude from
// sinh(H_b) sinh(L_b/2) = cosh(L_bdry/4), then L_a and L_ab off the
// symmetric holonomy. When the matrix entries would overflow, the traces
// tr(X Y^k) = 2 cosh(H_b) cosh((n - 2k) L_b / 4) are used in log scale
// instead (k = 0 and k = 1 give a and ab).
inline ReconstructedPoint reconstruct_point(long long n, double L_b_star,
                                            double L_boundary) {
  if (n < 3) throw std::invalid_argument("reconstruct_point: n must be >= 3");
  if (!(L_b_star > 0.0) || !std::isfinite(L_b_star))
    throw std::invalid_argument("reconstruct_point: L_b must be positive");
  if (!(L_boundary >= 0.0) || !std::isfinite(L_boundary))
    throw std::invalid_argument("reconstruct_point: boundary length must be >= 0");
  const double u = 0.25 * L_boundary;
  const double h = 0.5 * L_b_star;
  const double v = 0.25 * static_cast<double>(n) * L_b_star;

  ReconstructedPoint r;
  r.L_b = L_b_star;
  const double log_sinh_Hb = (u > kLogDomainThreshold)
                                 ? log_cosh(u) - log_sinh(h)
                                 : std::log(std::cosh(u) / std::sinh(h));
  r.H_b = (u > kLogDomainThreshold) ? asinh_from_log(log_sinh_Hb)
                                    : std::asinh(std::cosh(u) / std::sinh(h));
  r.log_domain = r.H_b + v > kLogDomainThreshold;
  if (!r.log_domain) {
    const SymmetricHolonomy s = symmetric_holonomy(L_b_star, r.H_b, n);
    r.L_a = length_from_trace(mat_trace(s.X));
    r.L_ab = length_from_trace(mat_trace(mat_mul(s.X, s.Y)));
  } else {
    const double lc = log_cosh(r.H_b);
    r.L_a = 2.0 * acosh_from_log(lc + log_cosh(v));
    r.L_ab = 2.0 * acosh_from_log(lc + log_cosh(v - h));  // (n-2) L_b / 4
  }
  r.validation = validate_point(r.L_a, r.L_b, r.L_ab, L_boundary);
  return r;
}

struct MinResult {
  long long n = 0;
  double L_boundary = 0;
  double L_b_star = 0;
  double L_min = 0;
  double L_a_star = 0, L_ab_star = 0;  // the rest of the minimum point
  double residual_root = 0;            // root equation residual at L_b_star
  double residual_variety = 0;         // character relation at the point, scaled by max(1, |xyz|)
  bool log_domain = false;
};

inline MinResult length_min(long long n, double L_boundary) {
  if (n < 3) throw std::invalid_argument("length_min: n must be >= 3");
  if (!(L_boundary >= 0.0) || !std::isfinite(L_boundary))
    throw std::invalid_argument("length_min: boundary length must be >= 0");
  MinResult r;
  r.n = n;
  r.L_boundary = L_boundary;
  r.L_b_star = solve_lb_star(n);
  r.residual_root = lb_star_residual(n, r.L_b_star);
  const double u = 0.25 * L_boundary;
  const double v = 0.25 * static_cast<double>(n) * r.L_b_star;  // stays near t*
  const double h = 0.5 * r.L_b_star;
  if (u + v > kLogDomainThreshold) {
    const double logS = std::log(0.5 * static_cast<double>(n)) + log_cosh(u) +
                        log_sinh(v) - log_cosh(h);
    r.L_min = 4.0 * asinh_from_log(logS);
  } else {
    r.L_min = 4.0 * std::asinh(0.5 * static_cast<double>(n) * std::cosh(u) *
                               std::sinh(v) / std::cosh(h));
  }
  const ReconstructedPoint p = reconstruct_point(n, r.L_b_star, L_boundary);
  r.L_a_star = p.L_a;
  r.L_ab_star = p.L_ab;
  r.residual_variety = p.validation.rel_residual;
  r.log_domain = p.log_domain;
  return r;
}

struct BruteForceResult {
  double L_b_hat = 0;
  double L_hat = 0;
  bool unimodal = false;  // scan profile decreased then increased
  bool interior = false;  // scan minimum was away from the bracket ends
};

// Independent check of the closed-form minimum: a 1024-point log-spaced scan
// of length_a2bn over [lo, hi] followed by golden-section refinement of the
// bracketing cell. Never consults solve_lb_star.
inline BruteForceResult brute_force_min(long long n, double L_boundary,
                                        double lo = 1e-6, double hi = 64.0,
                                        double tol = 1e-10) {
  if (n < 3) throw std::invalid_argument("brute_force_min: n must be >= 3");
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("brute_force_min: bad bracket");
  if (!(tol > 0.0)) throw std::invalid_argument("brute_force_min: tol must be positive");
  auto f = [&](double L) { return length_a2bn(L, L_boundary, n); };

  constexpr int kGrid = 1024;
  const double gl = std::log(lo), gh = std::log(hi);
  std::vector<double> xs(kGrid), vs(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    xs[static_cast<std::size_t>(i)] = std::exp(gl + (gh - gl) * i / (kGrid - 1));
    vs[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
  }
  int imin = 0;
  for (int i = 1; i < kGrid; ++i)
    if (vs[static_cast<std::size_t>(i)] < vs[static_cast<std::size_t>(imin)]) imin = i;

  BruteForceResult r;
  r.interior = imin > 0 && imin < kGrid - 1;
  // Unimodality of the scanned profile: no rise may ever be followed by a
  // fall. Differences below rounding scale are treated as flat.
  int first_plus = kGrid, last_minus = -1;
  for (int i = 0; i + 1 < kGrid; ++i) {
    const double a = vs[static_cast<std::size_t>(i)], b = vs[static_cast<std::size_t>(i + 1)];
    const double tiny = 1e-12 * std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
    if (b - a > tiny && i < first_plus) first_plus = i;
    if (a - b > tiny) last_minus = i;
  }
  r.unimodal = last_minus < first_plus;

  double a = xs[static_cast<std::size_t>(std::max(0, imin - 1))];
  double b = xs[static_cast<std::size_t>(std::min(kGrid - 1, imin + 1))];
  constexpr double kGolden = 0.6180339887498949;
  double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  r.L_b_hat = 0.5 * (a + b);
  r.L_hat = f(r.L_b_hat);
  return r;
}

struct AsymptoticsRow {
  long long n = 0;
  double L_boundary = 0;
  double L_b_star = 0;
  double n_L_b_star_over_4 = 0;
  double L_min = 0;
  double L_min_over_4ln_n = 0;
  double L_min_minus_boundary = 0;
};

struct AsymptoticsReport {
  std::vector<AsymptoticsRow> rows;  // sorted by (n, L_boundary)
  bool lb_star_decreasing_in_n = true;
  bool n_lb_star_over_4_decreasing_in_n = true;
  bool lmin_increasing_in_boundary = true;
};

// Cross product of the sorted input lists, one row per (n, boundary), with
// the monotonicity statements checked across the whole table.
inline AsymptoticsReport asymptotics_report(const std::vector<long long>& ns,
                                            const std::vector<double>& boundaries) {
  if (ns.empty() || boundaries.empty())
    throw std::invalid_argument("asymptotics_report: input lists must be nonempty");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 3) throw std::invalid_argument("asymptotics_report: n must be >= 3");
    if (i && !(ns[i] > ns[i - 1]))
      throw std::invalid_argument("asymptotics_report: n list must be strictly increasing");
  }
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    if (!(boundaries[i] >= 0.0))
      throw std::invalid_argument("asymptotics_report: boundary lengths must be >= 0");
    if (i && !(boundaries[i] > boundaries[i - 1]))
      throw std::invalid_argument("asymptotics_report: boundary list must be strictly increasing");
  }
  AsymptoticsReport rep;
  double prev_lb = 0, prev_t = 0;
  bool have_prev_n = false;
  for (const long long n : ns) {
    const double lb = solve_lb_star(n);
    const double t = 0.25 * static_cast<double>(n) * lb;
    if (have_prev_n) {
      rep.lb_star_decreasing_in_n &= lb < prev_lb;
      rep.n_lb_star_over_4_decreasing_in_n &= t < prev_t;
    }
    prev_lb = lb;
    prev_t = t;
    have_prev_n = true;
    double prev_lmin = 0;
    bool have_prev_b = false;
    for (const double b : boundaries) {
      const MinResult m = length_min(n, b);
      AsymptoticsRow row;
      row.n = n;
      row.L_boundary = b;
      row.L_b_star = m.L_b_star;
      row.n_L_b_star_over_4 = t;
      row.L_min = m.L_min;
      row.L_min_over_4ln_n = m.L_min / (4.0 * std::log(static_cast<double>(n)));
      row.L_min_minus_boundary = m.L_min - b;
      rep.rows.push_back(row);
      if (have_prev_b) rep.lmin_increasing_in_boundary &= m.L_min > prev_lmin;
      prev_lmin = m.L_min;
      have_prev_b = true;
    }
  }
  return rep;
}

}  // namespace fricke
