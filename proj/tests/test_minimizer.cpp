#include "fricke/minimizer.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fricke/stable.hpp"

using namespace fricke;

TEST_CASE("t* solves t tanh t = 1 to full precision") {
  const TStar t = solve_t_star();
  CHECK(std::fabs(t.residual) <= 1e-15);
  CHECK(std::fabs(t.value - 1.199678640257733833916369848641141944) < 1e-14);
  CHECK(std::fabs(t.value * std::tanh(t.value) - 1.0) < 1e-15);
}

TEST_CASE("the root equation bracket for n = 3 straddles the sign change") {
  CHECK(lb_star_residual(3, 1.9) < 0.0);
  CHECK(lb_star_residual(3, 2.0) > 0.0);
  const double lb = solve_lb_star(3);
  CHECK(1.9 < lb);
  CHECK(lb < 2.0);
  CHECK(std::fabs(lb_star_residual(3, lb)) <= 1e-14);
}

TEST_CASE("root residuals stay tiny across the whole range") {
  for (const long long n : {3LL, 4LL, 5LL, 8LL, 17LL, 100LL, 999LL, 100000LL}) {
    const double lb = solve_lb_star(n);
    CHECK(std::fabs(lb_star_residual(n, lb)) <= 1e-13);
  }
  CHECK_THROWS_AS(solve_lb_star(2), std::invalid_argument);
}

TEST_CASE("the critical point does not depend on the boundary length") {
  const double base = length_min(5, 0.0).L_b_star;
  for (const double b : {0.5, 3.0, 12.0, 40.0})
    CHECK(std::fabs(length_min(5, b).L_b_star - base) <= 1e-13);
}

TEST_CASE("the length function is stationary exactly at the root") {
  for (const long long n : {3LL, 4LL, 7LL}) {
    const double lb = solve_lb_star(n);
    const double h = 1e-5;
    const double d0 =
        (length_a2bn(lb + h, 1.0, n) - length_a2bn(lb - h, 1.0, n)) / (2 * h);
    CHECK(std::fabs(d0) < 1e-3);
    const double dm = (length_a2bn(lb - 0.1 + h, 1.0, n) -
                       length_a2bn(lb - 0.1 - h, 1.0, n)) / (2 * h);
    const double dp = (length_a2bn(lb + 0.1 + h, 1.0, n) -
                       length_a2bn(lb + 0.1 - h, 1.0, n)) / (2 * h);
    CHECK(dm < -1e-3);
    CHECK(dp > 1e-3);
  }
}

TEST_CASE("closed-form minimum equals the scan oracle") {
  for (const long long n : {3LL, 4LL, 12LL}) {
    for (const double b : {0.0, 2.0, 9.0}) {
      const MinResult m = length_min(n, b);
      const BruteForceResult bf = brute_force_min(n, b);
      CHECK(bf.unimodal);
      CHECK(bf.interior);
      CHECK(std::fabs(m.L_b_star - bf.L_b_hat) < 1e-7);
      CHECK(std::fabs(m.L_min - bf.L_hat) < 1e-7);
      CHECK(relative_gap(length_a2bn(m.L_b_star, b, n), m.L_min) < 1e-12);
    }
  }
}

TEST_CASE("reconstructed minimizing point lands on the right fiber") {
  for (const long long n : {3LL, 6LL, 25LL}) {
    const MinResult m = length_min(n, 1.5);
    const ReconstructedPoint p = reconstruct_point(n, m.L_b_star, 1.5);
    CHECK(p.validation.accepted);
    CHECK(p.validation.rel_residual < 1e-9);
    CHECK(relative_gap(p.L_a, m.L_a_star) < 1e-12);
    CHECK(relative_gap(p.L_ab, m.L_ab_star) < 1e-12);
    CHECK(m.residual_variety < 1e-9);
  }
}

TEST_CASE("minimum length grows with n and with the boundary") {
  double prev = 0.0;
  for (long long n = 3; n <= 40; ++n) {
    const double lm = length_min(n, 0.0).L_min;
    CHECK(lm > prev);
    prev = lm;
  }
  prev = 0.0;
  for (const double b : {0.0, 1.0, 2.0, 4.0, 8.0}) {
    const double lm = length_min(4, b).L_min;
    CHECK(lm > prev);
    prev = lm;
  }
}

TEST_CASE("n L_b*/4 decreases toward t*") {
  const double t_star = solve_t_star().value;
  double prev = 1e300;
  for (const long long n : {3LL, 5LL, 10LL, 100LL, 1000LL, 10000LL}) {
    const double tn = 0.25 * static_cast<double>(n) * solve_lb_star(n);
    CHECK(tn > t_star);
    CHECK(tn < prev);
    prev = tn;
  }
  CHECK(std::fabs(prev - t_star) < 1e-5);
}

TEST_CASE("log-domain evaluation at extreme n and boundary") {
  // at n = 1e6 with zero boundary every intermediate stays small; the point
  // of the exercise is that nothing overflows and the ratio hits its window
  const MinResult big = length_min(1000000, 0.0);
  CHECK(std::isfinite(big.L_min));
  CHECK(std::isfinite(big.L_a_star));
  CHECK(big.residual_variety < 1e-9);
  const double ratio = big.L_min / (4.0 * std::log(1e6));
  CHECK(ratio > 1.0);
  CHECK(ratio < 1.05);

  const MinResult wide = length_min(3, 4000.0);
  CHECK(wide.log_domain);
  CHECK(std::isfinite(wide.L_min));
  // for huge boundaries L_min - L_boundary approaches a constant
  const double off1 = length_min(3, 1000.0).L_min - 1000.0;
  const double off2 = length_min(3, 2000.0).L_min - 2000.0;
  CHECK(std::fabs(off1 - off2) < 1e-9);
}

TEST_CASE("asymptotics report carries the monotonicity flags") {
  const AsymptoticsReport rep =
      asymptotics_report({3, 4, 7, 20, 100}, {0.0, 5.0});
  CHECK(rep.rows.size() == 10);
  CHECK(rep.lb_star_decreasing_in_n);
  CHECK(rep.n_lb_star_over_4_decreasing_in_n);
  CHECK(rep.lmin_increasing_in_boundary);
  CHECK(rep.rows[0].n == 3);
  CHECK(rep.rows[0].L_boundary == 0.0);
  CHECK(rep.rows[1].L_boundary == 5.0);
  CHECK_THROWS_AS(asymptotics_report({}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(asymptotics_report({3, 3}, {0.0}), std::invalid_argument);
}

TEST_CASE("brute force scan flags stay meaningful off the defaults") {
  const BruteForceResult bf = brute_force_min(200, 20.0);
  CHECK(bf.unimodal);
  CHECK(bf.interior);
  CHECK(std::fabs(bf.L_b_hat - solve_lb_star(200)) < 1e-7);
}
