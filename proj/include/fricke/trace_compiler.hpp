#pragma once
// Compiles tr(w(X, Y)) into its exact polynomial in x = tr X, y = tr Y,
// z = tr XY, for X, Y in SL(2).
//
// After cyclic reduction the word is rewritten by two moves, each strictly
// decreasing the pair (total weight, number of inverse letters):
//
//   powers    g^e = tr(g) g^{e -/+ 1} - g^{e -/+ 2}            (Cayley-Hamilton)
//   inverses  tr(u g^{-1}) = tr(u) tr(g) - tr(u g)             (trace product rule)
//
// What survives is a power of a, of b, or of ab, closed by the Chebyshev-like
// recurrence tr(g^k) = tr(g) tr(g^{k-1}) - tr(g^{k-2}) with tr(g^0) = 2.
//
// Memoization is per call. Keys are the lexicographically least encoding over
// all cyclic rotations of the word and of its inverse-flip; both moves
// preserve the trace, so distinct keys never collide. The recursion always
// runs on the word as given (the key is lookup-only), which keeps identities
// like tr(w(X,Y)) = tr(w(X^-1,Y^-1)) a genuine property of the rewrite
// system rather than an artifact of key folding.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fricke/trace_polynomial.hpp"
#include "fricke/word.hpp"

namespace fricke {

struct CompileOptions {
  bool use_memo = true;
};

namespace detail {

using MemoKey = std::vector<std::int64_t>;
using MemoMap = std::map<MemoKey, TracePolynomial>;

inline MemoKey encode(const Word& w) {
  MemoKey k;
  k.reserve(2 * w.size());
  for (const auto& s : w.syllables()) {
    k.push_back(static_cast<std::int64_t>(s.gen));
    k.push_back(s.exp);
  }
  return k;
}

inline MemoKey canonical_key(const Word& w) {
  MemoKey best = encode(w);
  for (const Word& base : {w, flip_inverses(w)})
    for (const Word& rot : cyclic_rotations(base)) {
      MemoKey cand = encode(rot);
      if (cand < best) best = std::move(cand);
    }
  return best;
}

// tr(g^k) as a polynomial in t = tr(g); t is one of the three variables.
inline TracePolynomial power_trace(const TracePolynomial& t, std::int64_t k) {
  TracePolynomial prev = TracePolynomial::constant(2);
  if (k == 0) return prev;
  TracePolynomial cur = t;
  for (std::int64_t i = 2; i <= k; ++i) {
    TracePolynomial next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline TracePolynomial var_of(Gen g) {
  return g == Gen::A ? TracePolynomial::var_x() : TracePolynomial::var_y();
}

inline TracePolynomial compile(const Word& input, MemoMap* memo) {
  const Word w = cyclically_reduced(input);
  MemoKey key;
  if (memo) {
    key = canonical_key(w);
    if (auto it = memo->find(key); it != memo->end()) return it->second;
  }
  TracePolynomial out = [&]() -> TracePolynomial {
    const auto& s = w.syllables();
    if (s.empty()) return TracePolynomial::constant(2);
    if (s.size() == 1) return power_trace(var_of(s[0].gen), std::llabs(s[0].exp));

    // Largest exponent first: replace g^e by the three-term recurrence in k
    // on tr(.. g^k ..), iterated from the two strictly lighter base words.
    std::size_t big = s.size();
    std::int64_t mag = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (std::llabs(s[i].exp) > mag) {
        mag = std::llabs(s[i].exp);
        big = i;
      }
    if (big != s.size()) {
      const std::int64_t dir = s[big].exp > 0 ? 1 : -1;
      Word w0, w1;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == big) {
          w1.push(s[i].gen, dir);
        } else {
          w0.push(s[i]);
          w1.push(s[i]);
        }
      }
      const TracePolynomial t = var_of(s[big].gen);
      TracePolynomial prev = compile(w0, memo);
      TracePolynomial cur = compile(w1, memo);
      for (std::int64_t k = 2; k <= mag; ++k) {
        TracePolynomial next = t * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }

    // All exponents are +-1. Eliminate one inverse letter: rotate it to the
    // back (traces are conjugation invariant) and apply the product rule.
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].exp != -1) continue;
      Word u;
      for (std::size_t k = 1; k < s.size(); ++k) u.push(s[(i + k) % s.size()]);
      Word ug = u;
      ug.push(s[i].gen, 1);
      return compile(u, memo) * var_of(s[i].gen) - compile(ug, memo);
    }

    // Positive alternating cyclic word: necessarily (ab)^k up to rotation.
    return power_trace(TracePolynomial::var_z(), static_cast<std::int64_t>(s.size() / 2));
  }();
  if (memo) memo->emplace(std::move(key), out);
  return out;
}

}  // namespace detail

inline TracePolynomial trace_poly(const Word& w, const CompileOptions& opt = {}) {
  // Recursion depth scales with the syllable count, so unreasonably long
  // words are rejected instead of risking the stack.
  if (w.size() > 4096)
    throw std::invalid_argument("trace_poly: word has too many syllables");
  if (opt.use_memo) {
    detail::MemoMap memo;
    return detail::compile(w, &memo);
  }
  return detail::compile(w, nullptr);
}

// tr(X Y X^-1 Y^-1) = x^2 + y^2 + z^2 - x y z - 2, the classical commutator
// trace. Kept as fixed data; the compiler is tested against it.
inline TracePolynomial commutator_trace() {
  TracePolynomial p;
  p += TracePolynomial::monomial(2, 0, 0, 1);
  p += TracePolynomial::monomial(0, 2, 0, 1);
  p += TracePolynomial::monomial(0, 0, 2, 1);
  p += TracePolynomial::monomial(1, 1, 1, -1);
  p += TracePolynomial::constant(-2);
  return p;
}

}  // namespace fricke
