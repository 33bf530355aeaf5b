#include "fricke/stable.hpp"

#include <cmath>

#include "doctest.h"

using namespace fricke;

TEST_CASE("log_cosh matches log(cosh) where cosh is representable") {
  for (const double u : {0.0, 0.3, 1.0, 5.0, 50.0, 700.0})
    CHECK(relative_gap(log_cosh(u), std::log(std::cosh(std::min(u, 700.0)))) <
          1e-14);
  CHECK(log_cosh(-3.0) == log_cosh(3.0));
  // beyond the overflow point the asymptotic form u - ln 2 takes over
  CHECK(relative_gap(log_cosh(1e6), 1e6 - std::log(2.0)) < 1e-15);
}

TEST_CASE("log_sinh matches log(sinh) across the splitting point") {
  for (const double u : {1e-8, 0.2, 0.999, 1.001, 4.0, 300.0})
    CHECK(relative_gap(log_sinh(u), std::log(std::sinh(std::min(u, 700.0)))) <
          1e-13);
  CHECK(relative_gap(log_sinh(2e5), 2e5 - std::log(2.0)) < 1e-15);
}

TEST_CASE("acosh_stable agrees with std::acosh and extends past overflow") {
  for (const double u : {1.0 + 1e-12, 1.0001, 1.49, 1.51, 2.0, 1e7, 1e9})
    CHECK(relative_gap(acosh_stable(u), std::acosh(u)) < 1e-14);
  CHECK(relative_gap(acosh_stable(1e300), std::log(1e300) + std::log(2.0)) <
        1e-15);
}

TEST_CASE("inverse maps from log inputs") {
  for (const double u : {0.5, 2.0, 20.0, 400.0}) {
    CHECK(relative_gap(acosh_from_log(log_cosh(u)), u) < 1e-12);
    CHECK(relative_gap(asinh_from_log(log_sinh(u)), u) < 1e-12);
  }
  // arguments far beyond double range, passed in log space
  CHECK(relative_gap(acosh_from_log(5000.0), 5000.0 + std::log(2.0)) < 1e-15);
}

TEST_CASE("log(2 cosh u - 2) identity") {
  for (const double u : {0.01, 1.0, 10.0, 600.0})
    CHECK(relative_gap(log_2cosh_minus_2(u),
                       std::log(2.0 * std::cosh(std::min(u, 700.0)) - 2.0)) <
          1e-12);
}
