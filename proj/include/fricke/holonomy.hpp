#pragma once
// Matrix realizations: a standard SL(2,R) pair for a given trace triple, the
// symmetric pair used on the minimizing locus, and the word-trace oracle.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "fricke/mat2.hpp"
#include "fricke/stable.hpp"
#include "fricke/word.hpp"

namespace fricke {

struct TraceDiagnostics {
  double det_drift = 0.0;             // relative drift of the full product
  bool conditioning_warning = false;  // set when drift exceeds 1e-9
};

// tr(w(X, Y)) by multiplying the word out, syllable powers by repeated
// squaring. The optional diagnostics report how far the product's
// determinant has drifted from 1.
inline double numeric_trace(const Word& w, const Mat2& X, const Mat2& Y,
                            TraceDiagnostics* diag = nullptr) {
  Mat2 acc = Mat2::identity();
  for (const auto& s : w.syllables())
    acc = mat_mul(acc, mat_pow(s.gen == Gen::A ? X : Y, s.exp));
  if (diag) {
    diag->det_drift = acc.det_drift();
    diag->conditioning_warning = diag->det_drift > 1e-9;
  }
  return mat_trace(acc);
}

// One SL(2,R) pair with tr X = x, tr Y = y, tr XY = z, all required to
// exceed 2. Any two such pairs are conjugate, so callers may rely on traces
// only, never on the entries themselves.
inline std::pair<Mat2, Mat2> holonomy_from_traces(double x, double y, double z) {
  constexpr double kMin = 2.0 + 1e-12;
  if (!(x > kMin && y > kMin && z > kMin))
    throw std::domain_error("holonomy_from_traces: all traces must exceed 2");
  // eta is the root of t^2 - z t + 1 = 0 with eta >= 1, so tr XY = eta + 1/eta = z.
  const double eta = 0.5 * (z + std::sqrt(z * z - 4.0));
  const Mat2 X = Mat2::unchecked(x, -1.0, 1.0, 0.0);
  const Mat2 Y = Mat2::unchecked(0.0, eta, -1.0 / eta, y);
  return {X, Y};
}

struct SymmetricHolonomy {
  Mat2 Y;  // diag(e^{L_b/2}, e^{-L_b/2})
  Mat2 Z;  // [[cosh H_b, sinh H_b], [sinh H_b, cosh H_b]]
  Mat2 X;  // Z * Y^{-n/2}
};

// The symmetric pair realizing a point with given L_b and altitude H_b. The
// half power of Y is its positive diagonal square root, so the formula is
// valid for odd n too.
inline SymmetricHolonomy symmetric_holonomy(double L_b, double H_b, long long n) {
  if (!(L_b > 0.0) || !std::isfinite(L_b) || !(H_b > 0.0) || !std::isfinite(H_b))
    throw std::invalid_argument("symmetric_holonomy: L_b and H_b must be positive");
  if (n < 3) throw std::invalid_argument("symmetric_holonomy: n must be >= 3");
  const double q = 0.25 * static_cast<double>(n) * L_b;
  if (q > kLogDomainThreshold || H_b > kLogDomainThreshold)
    throw std::range_error(
        "symmetric_holonomy: entries would overflow doubles; use the "
        "log-domain length formulas instead");
  const double c = std::cosh(H_b), s = std::sinh(H_b);
  const Mat2 Y = Mat2::unchecked(std::exp(0.5 * L_b), 0.0, 0.0, std::exp(-0.5 * L_b));
  const Mat2 Z = Mat2::unchecked(c, s, s, c);
  const double d = std::exp(-q);
  const Mat2 X = mat_mul(Z, Mat2::unchecked(d, 0.0, 0.0, 1.0 / d));
  return {Y, Z, X};
}

}  // namespace fricke
