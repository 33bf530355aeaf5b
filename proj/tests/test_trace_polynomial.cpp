#include "fricke/trace_polynomial.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace fricke;

TEST_CASE("arithmetic and coefficient access") {
  const TracePolynomial p =
      TracePolynomial::var_x() * TracePolynomial::var_y() -
      TracePolynomial::var_z();
  CHECK(p.coefficient(1, 1, 0) == 1);
  CHECK(p.coefficient(0, 0, 1) == -1);
  CHECK(p.coefficient(2, 0, 0) == 0);
  const TracePolynomial q = p + TracePolynomial::var_z();
  CHECK(q.coefficient(0, 0, 1) == 0);
  CHECK(q == TracePolynomial::var_x() * TracePolynomial::var_y());
  CHECK((p - p).is_zero());
}

TEST_CASE("render uses graded ordering with explicit coefficients") {
  const TracePolynomial xy_minus_z =
      TracePolynomial::var_x() * TracePolynomial::var_y() -
      TracePolynomial::var_z();
  CHECK(xy_minus_z.render() == "1*x*y - 1*z");

  TracePolynomial comm;  // x^2 + y^2 + z^2 - xyz - 2 entered term by term
  comm += TracePolynomial::monomial(1, 1, 1, -1);
  comm += TracePolynomial::monomial(2, 0, 0, 1);
  comm += TracePolynomial::monomial(0, 2, 0, 1);
  comm += TracePolynomial::monomial(0, 0, 2, 1);
  comm += TracePolynomial::constant(-2);
  CHECK(comm.render() == "-1*x*y*z + 1*x^2 + 1*y^2 + 1*z^2 - 2");

  CHECK(TracePolynomial{}.render() == "0");
  CHECK(TracePolynomial::constant(-7).render() == "-7");
}

TEST_CASE("evaluation is a fixed-order sum") {
  const TracePolynomial p = TracePolynomial::monomial(2, 1, 0, 3) +
                            TracePolynomial::monomial(0, 0, 2, -1) +
                            TracePolynomial::constant(5);
  CHECK(p.eval(2.0, 3.0, 4.0) == 3 * 4 * 3 - 16 + 5);
  CHECK(p.eval(2.0, 3.0, 4.0) == p.eval(2.0, 3.0, 4.0));
}

#ifndef FRICKE_WIDE_COEFFS
TEST_CASE("coefficient overflow is detected, not wrapped") {
  const TracePolynomial big = TracePolynomial::constant(int64_t{1} << 62);
  CHECK_THROWS_AS(big * TracePolynomial::constant(4), std::overflow_error);
  CHECK_THROWS_AS(big + big + big, std::overflow_error);
}
#endif
