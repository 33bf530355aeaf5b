#pragma once
// Self-contained verification suites, one per layer of the library. The CLI
// `verify` command runs them; the test binaries reuse them. Each suite is a
// flat list of named checks with deterministic sampling.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "fricke/curve_family.hpp"
#include "fricke/holonomy.hpp"
#include "fricke/minimizer.hpp"
#include "fricke/sampling.hpp"
#include "fricke/stable.hpp"
#include "fricke/torus_geometry.hpp"
#include "fricke/trace_compiler.hpp"

namespace fricke {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;
  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  // Test hook: added to the constant coefficient of the q_3 seed used by the
  // family suite's factorization checks. Any nonzero value must make the
  // suite fail; that failure is itself asserted by the tests.
  long long q3_seed_bias = 0;
};

namespace detail {

class Checker {
 public:
  explicit Checker(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) {
      ++r_.failures;
      if (r_.messages.size() < 20) r_.messages.push_back(what);
    }
  }

  void close(double a, double b, double tol, const std::string& what) {
    const bool ok = relative_gap(a, b) <= tol;
    std::ostringstream os;
    if (!ok) os << what << ": " << a << " vs " << b;
    check(ok, ok ? what : os.str());
  }

  SuiteResult result() && { return std::move(r_); }

 private:
  SuiteResult r_;
};

}  // namespace detail

// Word algebra, matrix oracle, and the exactness of the trace compiler.
inline SuiteResult verify_traces() {
  detail::Checker c("traces");
  Rng rng(0x7061727365ULL);

  // parse/render round trip on random reduced words
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 12);
    c.check(parse_word(render_word(w)) == w, "parse(render(w)) == w");
  }

  // determinant stability across 64-factor products
  for (int trial = 0; trial < 20; ++trial) {
    const TraceTriple t = random_triple(rng);
    const auto [X, Y] = holonomy_from_traces(t.x, t.y, t.z);
    Mat2 acc = Mat2::identity();
    for (int k = 0; k < 64; ++k) {
      const Mat2& f = rng.coin() ? X : Y;
      acc = mat_mul(acc, rng.coin() ? f : mat_inverse(f));
    }
    c.check(acc.det_drift() <= 1e-10, "det drift after 64 products <= 1e-10");
  }

  // compiled polynomial vs the matrix oracle
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 12);
    const TracePolynomial p = trace_poly(w);
    for (int j = 0; j < 5; ++j) {
      const TraceTriple t = random_triple(rng);
      const auto [X, Y] = holonomy_from_traces(t.x, t.y, t.z);
      c.close(p.eval(t.x, t.y, t.z), numeric_trace(w, X, Y), 1e-9,
              "trace_poly vs numeric_trace on " + render_word(w));
    }
  }

  // invariance under inverting both generators: exact and numeric
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(rng, 12);
    c.check(trace_poly(w) == trace_poly(flip_inverses(w)),
            "trace_poly(w) == trace_poly(flip(w)) for " + render_word(w));
    const TraceTriple t = random_triple(rng);
    const auto [X, Y] = holonomy_from_traces(t.x, t.y, t.z);
    c.close(numeric_trace(w, X, Y),
            numeric_trace(w, mat_inverse(X), mat_inverse(Y)), 1e-9,
            "numeric trace under generator inversion");
  }

  // conjugation invariance: every cyclic rotation compiles identically
  for (int i = 0; i < 60; ++i) {
    const Word w = cyclically_reduced(random_word(rng, 10));
    const TracePolynomial p = trace_poly(w);
    for (const Word& rot : cyclic_rotations(w))
      c.check(trace_poly(rot) == p, "cyclic rotation invariance for " + render_word(w));
  }

  // product rule closure: tr(uv) + tr(u v^-1) = tr(u) tr(v)
  for (int i = 0; i < 60; ++i) {
    const Word u = random_word(rng, 6), v = random_word(rng, 6);
    const TracePolynomial lhs =
        trace_poly(concat(u, v)) + trace_poly(concat(u, inverse_word(v)));
    c.check(lhs == trace_poly(u) * trace_poly(v),
            "tr(uv) + tr(uv^-1) == tr(u) tr(v)");
  }

  // memoization soundness
  for (int i = 0; i < 50; ++i) {
    const Word w = random_word(rng, 10);
    c.check(trace_poly(w) == trace_poly(w, {.use_memo = false}),
            "memo on/off parity for " + render_word(w));
  }

  c.check(trace_poly(parse_word("abAB")) == commutator_trace(),
          "compiled commutator equals the fixed polynomial");
  return std::move(c).result();
}

// The x_m / P_n / q_n layer and the closed form for tr(X^2 Y^n).
inline SuiteResult verify_family(const VerifyOptions& opt = {}) {
  detail::Checker c("family");
  Rng rng(0x66616d696cULL);

  // exact factorizations: P_n - P_{parity base} = (4 - mu) q_n(y - 2)
  {
    const YMuPolynomial y = YMuPolynomial::var_y();
    const YMuPolynomial mu = YMuPolynomial::var_mu();
    const YMuPolynomial four_minus_mu = YMuPolynomial::constant(4) - mu;
    const YMuPolynomial y_minus_2 = y - YMuPolynomial::constant(2);
    const YMuPolynomial p0 = p_n_poly(0), p1 = p_n_poly(1);
    for (long long n = 2; n <= 60; ++n) {
      const QPolynomial q = q_polynomial_from_seeds(
          n, {BigInt(1)}, {BigInt(2) + BigInt(opt.q3_seed_bias), BigInt(1)});
      YMuPolynomial qy;  // q_n(y - 2) expanded over (y, mu)
      YMuPolynomial pw = YMuPolynomial::constant(1);
      for (std::size_t k = 0; k < q.coeffs.size(); ++k) {
        qy += pw * YMuPolynomial::monomial(0, 0, q.coeffs[k]);
        pw = pw * y_minus_2;
      }
      const YMuPolynomial lhs = p_n_poly(n) - (n % 2 == 0 ? p0 : p1);
      c.check(lhs == four_minus_mu * qy,
              "P_" + std::to_string(n) + " factorization identity");
      bool positive = !q.coeffs.empty();
      for (const BigInt& a : q.coeffs) positive = positive && a > 0;
      c.check(positive, "q_" + std::to_string(n) + " coefficients positive");
    }
  }

  // three-term identities for x_m at random triples
  for (int i = 0; i < 100; ++i) {
    const TraceTriple t = random_triple(rng, 2.2, 6.0);
    const double mu = t.x * t.x + t.y * t.y + t.z * t.z - t.x * t.y * t.z;
    const XmSequence xs = xm_sequence(t.x, t.y, t.z, -3, 8);
    for (long long m = -1; m <= 6; ++m) {
      const double d = xs.at(m - 1) - xs.at(m + 1);
      c.close(xs.at(m) * xs.at(m),
              (d * d + 4.0 * (t.y * t.y - mu)) / (t.y * t.y - 4.0), 1e-9,
              "x_m^2 identity");
      const double e = xs.at(m) - xs.at(m + 1);
      c.close(xs.at(m) * xs.at(m + 1), (e * e + t.y * t.y - mu) / (t.y - 2.0),
              1e-9, "x_m x_{m+1} identity");
      // the two products cancel down to y^2 - mu, so roundoff scales with
      // the product magnitude (~lambda^{2m}), not with the small result
      const double prod = xs.at(m - 1) * xs.at(m + 1);
      const double scale = std::fmax(1.0, std::fabs(prod));
      c.check(std::fabs(prod - xs.at(m) * xs.at(m) - (t.y * t.y - mu)) <=
                  1e-12 * scale,
              "shifted product identity");
    }
  }

  // closed form == compiled polynomial == matrix oracle for a^2 b^n. The
  // triples stay away from y = 2: monomial evaluation of the degree-n
  // polynomial loses a factor like ((y + sqrt(y^2+4)) / (y + sqrt(y^2-4)))^n
  // to sign cancellation, which passes 1e-9 near y = 2.1 already at n = 40.
  for (long long n = 2; n <= 40; ++n) {
    Word w;
    w.push(Gen::A, 2);
    w.push(Gen::B, n);
    const TracePolynomial p = trace_poly(w);
    for (int j = 0; j < 5; ++j) {
      const TraceTriple t = random_triple(rng, 2.75, 8.0);
      const auto [X, Y] = holonomy_from_traces(t.x, t.y, t.z);
      const double closed = trace_a2bn_closed(n, t.x, t.y, t.z);
      const double oracle = numeric_trace(w, X, Y);
      c.close(closed, oracle, 1e-9, "closed form vs oracle, n=" + std::to_string(n));
      c.close(p.eval(t.x, t.y, t.z), oracle, 1e-9,
              "compiled polynomial vs oracle, n=" + std::to_string(n));
    }
  }

  // P_n numeric vs its defining word trace
  for (long long n = 2; n <= 12; ++n) {
    const long long m = n / 2;
    Word w;
    w.push(Gen::A, 1);
    w.push(Gen::B, m);
    w.push(Gen::A, -1);
    w.push(Gen::B, n % 2 == 0 ? -m : -(m + 1));
    for (int j = 0; j < 5; ++j) {
      const TraceTriple t = random_triple(rng);
      const double mu = t.x * t.x + t.y * t.y + t.z * t.z - t.x * t.y * t.z;
      const auto [X, Y] = holonomy_from_traces(t.x, t.y, t.z);
      c.close(p_n(n, t.y, mu), -numeric_trace(w, X, Y), 1e-9,
              "P_n vs defining trace, n=" + std::to_string(n));
    }
  }

  // fixed low-order data
  c.check(q_n(4).coeffs == std::vector<BigInt>{BigInt(4), BigInt(4), BigInt(1)},
          "q_4 = t^2 + 4t + 4");
  c.check(q_n(5).coeffs ==
              std::vector<BigInt>{BigInt(6), BigInt(11), BigInt(6), BigInt(1)},
          "q_5 = t^3 + 6t^2 + 11t + 6");
  c.close(p_n(2, 3.0, 0.0), 2.0, 1e-15, "P_2(3, 0) = 2");
  c.close(p_n(3, 3.0, 0.0), 9.0, 1e-15, "P_3(3, 0) = 9");
  return std::move(c).result();
}

// The length/trace dictionary and the triangle identities.
inline SuiteResult verify_geometry() {
  detail::Checker c("geometry");
  Rng rng(0x67656f6dULL);

  for (int i = 0; i < 200; ++i) {
    const double L = rng.uniform(0.05, 40.0);
    c.close(length_from_trace(trace_from_length(L)), L, 1e-12, "length round trip");
    const double b = rng.uniform(0.0, 40.0);
    c.close(boundary_from_mu(mu_from_boundary(b)), b, 1e-10, "boundary round trip");
  }

  int accepted = 0;
  for (int i = 0; i < 2000; ++i) {
    const SampledPoint p = sample_fiber_point(rng);
    const ValidationReport r = validate_point(p.L_a, p.L_b, p.L_ab, p.L_boundary);
    accepted += r.accepted ? 1 : 0;
    const double target = std::cosh(0.25 * p.L_boundary);

    // angle identity: sinh(L_a/2) sinh(L_b/2) sin(theta) = cosh(L_bdry/4)
    const WeierstrassTriangle w = weierstrass(p.L_a, p.L_b, p.L_ab, p.L_boundary);
    c.close(std::sinh(0.5 * p.L_a) * std::sinh(0.5 * p.L_b) * std::sin(w.theta),
            target, 1e-10, "angle identity");
    // altitude identity: sinh(H_b) sinh(L_b/2) = cosh(L_bdry/4)
    c.close(std::sinh(w.H_b) * std::sinh(0.5 * p.L_b), target, 1e-10,
            "altitude identity");
    c.close(w.H_b, p.H_b, 1e-9, "altitude matches construction");
    // sqrt(1 - mu/4) = cosh(L_bdry/4)
    c.close(std::sqrt(1.0 - r.mu / 4.0), target, 1e-10, "boundary quarter identity");
    // the commutator trace of any valid point stays <= -2
    const auto [X, Y] = holonomy_from_traces(r.x, r.y, r.z);
    const double comm = numeric_trace(parse_word("abAB"), X, Y);
    c.check(comm <= -2.0 + 1e-9, "commutator trace <= -2");
    c.close(comm, r.mu - 2.0, 1e-9, "commutator trace = mu - 2");
  }
  c.check(accepted == 2000, "all sampled fiber points accepted");

  const ValidationReport bad = validate_point(
      length_from_trace(3.0), length_from_trace(3.0), length_from_trace(6.0), 2.0);
  c.check(!bad.accepted, "off-fiber point rejected");
  return std::move(c).result();
}

// The closed-form minimizer against its own invariants and the scan oracle.
inline SuiteResult verify_minimize() {
  detail::Checker c("minimize");

  for (long long n = 3; n <= 1000; ++n) {
    const double lb = solve_lb_star(n);
    c.check(std::fabs(lb_star_residual(n, lb)) <= 1e-12,
            "root residual at n=" + std::to_string(n));
  }

  {
    const TStar t = solve_t_star();
    c.check(std::fabs(t.residual) <= 1e-14, "t* residual");
    c.close(t.value, 1.199678640257733833916369848641141944, 1e-12, "t* digits");
  }

  // the root does not move with the boundary length
  for (const long long n : {3LL, 7LL, 40LL}) {
    const double base = length_min(n, 0.0).L_b_star;
    for (const double b : {1.0, 5.0, 20.0})
      c.check(std::fabs(length_min(n, b).L_b_star - base) <= 1e-12,
              "L_b* independent of boundary, n=" + std::to_string(n));
  }

  // stationarity at the root, strict slopes on both sides
  for (const long long n : {3LL, 4LL, 5LL}) {
    const double lb = solve_lb_star(n);
    for (const double b : {0.0, 5.0}) {
      const double step = 1e-5;
      const double centered = (length_a2bn(lb + step, b, n) -
                               length_a2bn(lb - step, b, n)) / (2.0 * step);
      c.check(std::fabs(centered) <= 1e-3, "derivative ~ 0 at L_b*");
      const double left = (length_a2bn(lb - 0.1 + step, b, n) -
                           length_a2bn(lb - 0.1 - step, b, n)) / (2.0 * step);
      const double right = (length_a2bn(lb + 0.1 + step, b, n) -
                            length_a2bn(lb + 0.1 - step, b, n)) / (2.0 * step);
      c.check(left < -1e-3 && right > 1e-3, "strict slopes at L_b* +- 0.1");
    }
  }

  // closed form vs brute-force scan
  for (const long long n : {3LL, 5LL, 10LL, 50LL, 200LL}) {
    for (const double b : {0.0, 1.0, 5.0, 20.0}) {
      const MinResult m = length_min(n, b);
      const BruteForceResult bf = brute_force_min(n, b);
      c.check(bf.unimodal && bf.interior, "scan profile unimodal and interior");
      c.check(std::fabs(m.L_b_star - bf.L_b_hat) <= 1e-7,
              "L_b* vs scan, n=" + std::to_string(n));
      c.check(std::fabs(m.L_min - bf.L_hat) <= 1e-7,
              "L_min vs scan, n=" + std::to_string(n));
      c.close(length_a2bn(m.L_b_star, b, n), m.L_min, 1e-12,
              "two length formulas agree");
      c.check(m.residual_variety <= 1e-8, "reconstructed point on the fiber");

      // trace symmetry at the minimum: tr(X Y^m) pairs up around n/2
      const ReconstructedPoint p = reconstruct_point(n, m.L_b_star, b);
      const SymmetricHolonomy s = symmetric_holonomy(m.L_b_star, p.H_b, n);
      const long long half = n / 2;
      const Mat2 lhsM = mat_mul(s.X, mat_pow(s.Y, n % 2 == 0 ? half - 1 : half));
      const Mat2 rhsM = mat_mul(s.X, mat_pow(s.Y, half + 1));
      c.close(mat_trace(lhsM), mat_trace(rhsM), 1e-9, "parity trace symmetry");
    }
  }

  // monotonicity in n and against the limit constant
  {
    double prev_lb = 0, prev_t = 0;
    bool mono_lb = true, mono_t = true;
    for (long long n = 3; n <= 200; ++n) {
      const double lb = solve_lb_star(n);
      const double tn = 0.25 * static_cast<double>(n) * lb;
      if (n > 3) {
        mono_lb = mono_lb && lb < prev_lb;
        mono_t = mono_t && tn < prev_t;
      }
      prev_lb = lb;
      prev_t = tn;
    }
    c.check(mono_lb, "L_b* strictly decreasing in n");
    c.check(mono_t, "n L_b*/4 strictly decreasing in n");
    const double t4 = 0.25 * 10000.0 * solve_lb_star(10000);
    c.check(std::fabs(t4 - solve_t_star().value) <= 1e-5, "n L_b*/4 -> t*");
  }

  // growth in the boundary length
  for (const long long n : {3LL, 7LL, 12LL}) {
    double prev = -1.0;
    bool mono = true;
    for (int i = 0; i < 50; ++i) {
      const double b = 100.0 * i / 49.0;
      const double lm = length_min(n, b).L_min;
      mono = mono && lm > prev;
      prev = lm;
    }
    c.check(mono, "L_min strictly increasing in boundary, n=" + std::to_string(n));
  }

  // asymptotic regime: no overflow, ratio in the proven window
  {
    const MinResult big = length_min(1000000, 0.0);
    c.check(std::isfinite(big.L_min), "n = 1e6 stays finite");
    const double ratio = big.L_min / (4.0 * std::log(1e6));
    c.check(ratio >= 1.0 && ratio <= 1.05, "L_min / 4 ln n in [1, 1.05]");
    const double off4 = length_min(3, 400.0).L_min - 400.0;
    const double off8 = length_min(3, 800.0).L_min - 800.0;
    c.check(std::fabs(off4 - off8) <= 1e-6, "L_min - L_bdry saturates");
  }
  return std::move(c).result();
}

inline std::vector<SuiteResult> verify_all(const VerifyOptions& opt = {}) {
  return {verify_traces(), verify_family(opt), verify_geometry(), verify_minimize()};
}

}  // namespace fricke
