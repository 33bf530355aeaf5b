#include "fricke/curve_family.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fricke/holonomy.hpp"
#include "fricke/sampling.hpp"
#include "fricke/stable.hpp"
#include "fricke/trace_compiler.hpp"

using namespace fricke;

TEST_CASE("x_m recurrence from the anchor values") {
  // at (x, y, z) = (3, 3, 6): 3, 6, 15, 39 going up, and x_{-1} = x y - z = 3
  const XmSequence xs = xm_sequence(3.0, 3.0, 6.0, -1, 3);
  CHECK(xs.at(-1) == 3.0);
  CHECK(xs.at(0) == 3.0);
  CHECK(xs.at(1) == 6.0);
  CHECK(xs.at(2) == 15.0);
  CHECK(xs.at(3) == 39.0);
  CHECK_THROWS_AS(xs.at(4), std::out_of_range);
}

TEST_CASE("x_m against the matrix oracle") {
  Rng rng(0x786d5f6dULL);
  for (int i = 0; i < 30; ++i) {
    const TraceTriple t = random_triple(rng);
    const auto [X, Y] = holonomy_from_traces(t.x, t.y, t.z);
    const XmSequence xs = xm_sequence(t.x, t.y, t.z, -4, 6);
    for (long long m = -4; m <= 6; ++m) {
      Word w;
      w.push(Gen::A, 1);
      if (m != 0) w.push(Gen::B, m);
      CHECK(relative_gap(xs.at(m), numeric_trace(w, X, Y)) < 1e-10);
    }
  }
}

TEST_CASE("P_n spot values and the defining word traces") {
  CHECK(p_n(0, 3.0, 0.0) == -2.0);
  CHECK(p_n(1, 3.0, 0.0) == -3.0);
  CHECK(p_n(2, 3.0, 0.0) == 2.0);
  CHECK(p_n(3, 3.0, 0.0) == 9.0);

  // P_{2m} = -tr(X Y^m X^-1 Y^-m), P_{2m+1} = -tr(X Y^m X^-1 Y^-m-1)
  Rng rng(0x705f6e00ULL);
  for (int i = 0; i < 20; ++i) {
    const TraceTriple t = random_triple(rng);
    const double mu = t.x * t.x + t.y * t.y + t.z * t.z - t.x * t.y * t.z;
    const auto [X, Y] = holonomy_from_traces(t.x, t.y, t.z);
    for (long long n = 2; n <= 11; ++n) {
      const long long m = n / 2;
      Word w;
      w.push(Gen::A, 1);
      w.push(Gen::B, m);
      w.push(Gen::A, -1);
      w.push(Gen::B, n % 2 == 0 ? -m : -(m + 1));
      CHECK(relative_gap(p_n(n, t.y, mu), -numeric_trace(w, X, Y)) < 1e-9);
    }
  }
}

TEST_CASE("q_n low-order coefficients") {
  CHECK(q_n(2).coeffs == std::vector<BigInt>{BigInt(1)});
  CHECK(q_n(3).coeffs == std::vector<BigInt>{BigInt(2), BigInt(1)});
  CHECK(q_n(4).coeffs == std::vector<BigInt>{BigInt(4), BigInt(4), BigInt(1)});
  CHECK(q_n(5).coeffs ==
        std::vector<BigInt>{BigInt(6), BigInt(11), BigInt(6), BigInt(1)});
  // q_6 = t^4 + 8t^3 + 22t^2 + 24t + 9
  CHECK(q_n(6).coeffs == std::vector<BigInt>{BigInt(9), BigInt(24), BigInt(22),
                                             BigInt(8), BigInt(1)});
  CHECK_THROWS_AS(q_n(1), std::invalid_argument);
}

TEST_CASE("q_n has degree n - 2 and positive coefficients up to n = 60") {
  for (long long n = 2; n <= 60; ++n) {
    const QPolynomial q = q_n(n);
    REQUIRE(q.coeffs.size() == static_cast<std::size_t>(n - 1));
    CHECK(q.coeffs.back() == 1);
    for (const BigInt& a : q.coeffs) CHECK(a > 0);
  }
}

TEST_CASE("exact factorization P_n - P_{n mod 2} = (4 - mu) q_n(y - 2)") {
  const YMuPolynomial y_minus_2 =
      YMuPolynomial::var_y() - YMuPolynomial::constant(2);
  const YMuPolynomial four_minus_mu =
      YMuPolynomial::constant(4) - YMuPolynomial::var_mu();
  for (long long n = 2; n <= 24; ++n) {
    const QPolynomial q = q_n(n);
    YMuPolynomial qy, pw = YMuPolynomial::constant(1);
    for (const BigInt& ck : q.coeffs) {
      qy += pw * YMuPolynomial::monomial(0, 0, ck);
      pw = pw * y_minus_2;
    }
    const YMuPolynomial base = p_n_poly(n % 2 == 0 ? 0 : 1);
    CHECK(p_n_poly(n) - base == four_minus_mu * qy);
  }
}

TEST_CASE("closed form for tr(X^2 Y^n) at the integer point") {
  // n = 2: 144/5 + 2 + 4 (4/5 + 1) = 38, n = 3: 81 + 2 + 4 (1 + 3) = 99
  CHECK(relative_gap(trace_a2bn_closed(2, 3.0, 3.0, 6.0), 38.0) < 1e-13);
  CHECK(relative_gap(trace_a2bn_closed(3, 3.0, 3.0, 6.0), 99.0) < 1e-13);
}

TEST_CASE("closed form vs compiled polynomial vs matrix oracle") {
  Rng rng(0x74726970ULL);
  for (long long n = 2; n <= 40; ++n) {
    Word w;
    w.push(Gen::A, 2);
    w.push(Gen::B, n);
    const TracePolynomial p = trace_poly(w);
    for (int j = 0; j < 3; ++j) {
      // y away from 2 keeps the monomial evaluation of the degree-n
      // polynomial conditioned; see the matching note in verify_family
      const TraceTriple t = random_triple(rng, 2.75, 8.0);
      const auto [X, Y] = holonomy_from_traces(t.x, t.y, t.z);
      const double oracle = numeric_trace(w, X, Y);
      CHECK(relative_gap(trace_a2bn_closed(n, t.x, t.y, t.z), oracle) < 1e-9);
      CHECK(relative_gap(p.eval(t.x, t.y, t.z), oracle) < 1e-9);
    }
  }
}

TEST_CASE("closed form needs y away from the parabolic locus") {
  CHECK_THROWS_AS(trace_a2bn_closed(5, 3.0, 2.0, 3.0), std::domain_error);
}

TEST_CASE("self intersection count") {
  CHECK(self_intersection(3) == 2);
  CHECK(self_intersection(10) == 9);
  CHECK_THROWS_AS(self_intersection(2), std::invalid_argument);
}
