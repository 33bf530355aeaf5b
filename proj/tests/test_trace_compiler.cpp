#include "fricke/trace_compiler.hpp"

#include <stdexcept>
#include <string>

#include "doctest.h"
#include "fricke/holonomy.hpp"
#include "fricke/sampling.hpp"
#include "fricke/stable.hpp"

using namespace fricke;

TEST_CASE("base cases") {
  CHECK(trace_poly(Word{}) == TracePolynomial::constant(2));
  CHECK(trace_poly(parse_word("a")) == TracePolynomial::var_x());
  CHECK(trace_poly(parse_word("B")) == TracePolynomial::var_y());
  CHECK(trace_poly(parse_word("ab")) == TracePolynomial::var_z());
  // tr X^2 = x^2 - 2 via the Chebyshev step
  CHECK(trace_poly(parse_word("a^2")) ==
        TracePolynomial::monomial(2, 0, 0, 1) + TracePolynomial::constant(-2));
  CHECK(trace_poly(parse_word("a^-2")) == trace_poly(parse_word("a^2")));
}

TEST_CASE("product rule results match hand reductions") {
  CHECK(trace_poly(parse_word("aB")).render() == "1*x*y - 1*z");
  CHECK(trace_poly(parse_word("abAB")).render() ==
        "-1*x*y*z + 1*x^2 + 1*y^2 + 1*z^2 - 2");
  CHECK(trace_poly(parse_word("abAB")) == commutator_trace());
}

TEST_CASE("compiled values match the matrix oracle at integer points") {
  const Mat2 X(2, 1, 1, 1);
  const Mat2 Y(1, 1, 1, 2);
  // at this point (x, y, z) = (3, 3, 6)
  CHECK(trace_poly(parse_word("a^2b^2")).eval(3, 3, 6) == 38);
  CHECK(trace_poly(parse_word("a^2b^3")).eval(3, 3, 6) == 99);
  CHECK(trace_poly(parse_word("a^2b^3")).eval(3, 3, 6) ==
        numeric_trace(parse_word("a^2b^3"), X, Y));
}

TEST_CASE("compiled values match the matrix oracle at random points") {
  Rng rng(0x636f6d70ULL);
  for (int i = 0; i < 80; ++i) {
    const Word w = random_word(rng, 12);
    const TracePolynomial p = trace_poly(w);
    const TraceTriple t = random_triple(rng);
    const auto [X, Y] = holonomy_from_traces(t.x, t.y, t.z);
    CHECK(relative_gap(p.eval(t.x, t.y, t.z), numeric_trace(w, X, Y)) < 1e-9);
  }
}

TEST_CASE("memoization changes nothing") {
  Rng rng(0x6d656d6fULL);
  for (int i = 0; i < 40; ++i) {
    const Word w = random_word(rng, 10);
    CHECK(trace_poly(w) == trace_poly(w, {.use_memo = false}));
  }
}

TEST_CASE("inverting both generators fixes every trace polynomial") {
  Rng rng(0x666c6970ULL);
  for (int i = 0; i < 40; ++i) {
    const Word w = random_word(rng, 10);
    // with and without the memo, which canonicalizes over this very symmetry
    CHECK(trace_poly(w) == trace_poly(flip_inverses(w)));
    CHECK(trace_poly(w, {.use_memo = false}) ==
          trace_poly(flip_inverses(w), {.use_memo = false}));
  }
}

TEST_CASE("exponent reduction iterates instead of recursing per letter") {
  // 60 steps of the three-term loop; the result still fits in int64 and
  // matches the matrix oracle to full double precision.
  const Word w = parse_word("a^2b^60");
  const TracePolynomial p = trace_poly(w);
  const auto [X, Y] = holonomy_from_traces(3.0, 3.0, 6.0);
  CHECK(relative_gap(p.eval(3, 3, 6), numeric_trace(w, X, Y)) < 1e-12);
}

#ifndef FRICKE_WIDE_COEFFS
TEST_CASE("coefficient overflow surfaces as an error naming the escape hatch") {
  try {
    trace_poly(parse_word("b^200"));
    FAIL("expected overflow");
  } catch (const std::overflow_error& e) {
    CHECK(std::string(e.what()).find("FRICKE_WIDE_COEFFS") != std::string::npos);
  }
}
#endif

TEST_CASE("syllable count cap") {
  Word w;
  for (int i = 0; i < 5000; ++i) {
    w.push(Gen::A, (i % 2) ? 2 : 1);
    w.push(Gen::B, (i % 3) ? 1 : -1);
  }
  CHECK_THROWS_AS(trace_poly(w), std::invalid_argument);
}
