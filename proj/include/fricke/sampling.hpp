#pragma once
// Deterministic sampling helpers shared by the verification suites and the
// test binaries. The generator maps raw mt19937_64 output to doubles
// directly, so a fixed seed reproduces the same stream everywhere.

#include <cmath>
#include <cstdint>
#include <random>

#include "fricke/holonomy.hpp"
#include "fricke/torus_geometry.hpp"
#include "fricke/word.hpp"

namespace fricke {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  double uniform(double a, double b) {
    return a + (b - a) * std::ldexp(static_cast<double>(g_() >> 11), -53);
  }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(g_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (g_() & 1) != 0; }

 private:
  std::mt19937_64 g_;
};

// Random fully reduced word of total exponent weight in [1, max_weight]:
// alternating generators, exponent magnitudes up to 4, random signs.
inline Word random_word(Rng& rng, std::int64_t max_weight) {
  std::int64_t budget = rng.uniform_int(1, max_weight);
  Word w;
  Gen g = rng.coin() ? Gen::A : Gen::B;
  while (budget > 0) {
    const std::int64_t m = rng.uniform_int(1, std::min<std::int64_t>(4, budget));
    w.push(g, rng.coin() ? m : -m);
    g = other(g);
    budget -= m;
  }
  return w;
}

struct TraceTriple {
  double x, y, z;
};

inline TraceTriple random_triple(Rng& rng, double lo = 2.01, double hi = 8.0) {
  return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

struct SampledPoint {
  double L_a, L_b, L_ab, L_boundary;
  long long n;
  double H_b;
};

// A random point of a fixed-boundary fiber, built on the symmetric locus:
// draw (L_b, H_b, n), read the lengths off the holonomy, and recover the
// boundary from sinh(H_b) sinh(L_b/2) = cosh(L_bdry/4). The altitude is
// drawn above asinh(1/sinh(L_b/2)) so that boundary is real, and n L_b/4 is
// capped at 2 so the triangle never degenerates: recovering the angle from
// the side lengths stays conditioned to ~1e-13.
inline SampledPoint sample_fiber_point(Rng& rng) {
  const long long n = rng.uniform_int(3, 12);
  const double L_b = rng.uniform(0.1, 8.0 / static_cast<double>(n));
  const double H_min = std::asinh(1.0 / std::sinh(0.5 * L_b));
  const double H_b = H_min + rng.uniform(0.0, 2.0);
  const double w = std::fmax(1.0, std::sinh(H_b) * std::sinh(0.5 * L_b));
  const double L_bdry = 4.0 * std::acosh(w);
  const SymmetricHolonomy s = symmetric_holonomy(L_b, H_b, n);
  const double L_a = length_from_trace(mat_trace(s.X));
  const double L_ab = length_from_trace(mat_trace(mat_mul(s.X, s.Y)));
  return {L_a, L_b, L_ab, L_bdry, n, H_b};
}

}  // namespace fricke
