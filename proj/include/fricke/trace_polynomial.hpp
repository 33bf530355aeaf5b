#pragma once
// Exact integer polynomials in the trace coordinates x = tr X, y = tr Y,
// z = tr XY. Terms are kept in graded lexicographic order (highest first) so
// rendering and evaluation are deterministic.
//
// Coefficients are overflow-checked 64-bit integers by default. Building
// with FRICKE_WIDE_COEFFS switches them to boost::multiprecision::cpp_int
// for words whose coefficients outgrow 64 bits (total exponent weight beyond
// roughly 40).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef FRICKE_WIDE_COEFFS
#include <boost/multiprecision/cpp_int.hpp>
#endif

namespace fricke {

#ifdef FRICKE_WIDE_COEFFS
using Coeff = boost::multiprecision::cpp_int;
inline Coeff coeff_add(const Coeff& a, const Coeff& b) { return a + b; }
inline Coeff coeff_mul(const Coeff& a, const Coeff& b) { return a * b; }
inline double coeff_to_double(const Coeff& c) { return c.convert_to<double>(); }
inline std::string coeff_to_string(const Coeff& c) { return c.str(); }
#else
using Coeff = std::int64_t;
inline Coeff coeff_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error(
        "trace polynomial coefficient overflow; rebuild with FRICKE_WIDE_COEFFS");
  return r;
}
inline Coeff coeff_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error(
        "trace polynomial coefficient overflow; rebuild with FRICKE_WIDE_COEFFS");
  return r;
}
inline double coeff_to_double(Coeff c) { return static_cast<double>(c); }
inline std::string coeff_to_string(Coeff c) { return std::to_string(c); }
#endif

struct Monomial {
  int ex = 0, ey = 0, ez = 0;
  int degree() const { return ex + ey + ez; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lex with the highest term first: larger total degree wins, ties
// break lexicographically on (ex, ey, ez).
struct GrlexGreater {
  bool operator()(const Monomial& l, const Monomial& r) const {
    if (l.degree() != r.degree()) return l.degree() > r.degree();
    if (l.ex != r.ex) return l.ex > r.ex;
    if (l.ey != r.ey) return l.ey > r.ey;
    return l.ez > r.ez;
  }
};

class TracePolynomial {
 public:
  using TermMap = std::map<Monomial, Coeff, GrlexGreater>;

  TracePolynomial() = default;

  static TracePolynomial constant(Coeff c) { return monomial(0, 0, 0, c); }

  static TracePolynomial monomial(int ex, int ey, int ez, Coeff c) {
    TracePolynomial p;
    if (c != 0) p.terms_[{ex, ey, ez}] = c;
    return p;
  }

  static TracePolynomial var_x() { return monomial(1, 0, 0, 1); }
  static TracePolynomial var_y() { return monomial(0, 1, 0, 1); }
  static TracePolynomial var_z() { return monomial(0, 0, 1, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(int ex, int ey, int ez) const {
    auto it = terms_.find({ex, ey, ez});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  TracePolynomial& operator+=(const TracePolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }

  TracePolynomial& operator-=(const TracePolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, coeff_mul(c, Coeff(-1)));
    return *this;
  }

  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) {
    a += b;
    return a;
  }

  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) {
    a -= b;
    return a;
  }

  friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
    TracePolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        out.add_term({ma.ex + mb.ex, ma.ey + mb.ey, ma.ez + mb.ez}, coeff_mul(ca, cb));
    return out;
  }

  TracePolynomial scaled(Coeff k) const {
    TracePolynomial out;
    for (const auto& [m, c] : terms_) out.add_term(m, coeff_mul(c, k));
    return out;
  }

  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;

  // Term-by-term evaluation in the fixed graded order, powers precomputed;
  // the summation order never varies, so results are bit-reproducible.
  double eval(double x, double y, double z) const {
    int dx = 0, dy = 0, dz = 0;
    for (const auto& [m, c] : terms_) {
      if (m.ex > dx) dx = m.ex;
      if (m.ey > dy) dy = m.ey;
      if (m.ez > dz) dz = m.ez;
    }
    const auto powers = [](double v, int d) {
      std::vector<double> p(static_cast<std::size_t>(d) + 1, 1.0);
      for (int k = 1; k <= d; ++k) p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k - 1)] * v;
      return p;
    };
    const std::vector<double> px = powers(x, dx), py = powers(y, dy), pz = powers(z, dz);
    double acc = 0.0;
    for (const auto& [m, c] : terms_)
      acc += coeff_to_double(c) * px[static_cast<std::size_t>(m.ex)] *
             py[static_cast<std::size_t>(m.ey)] * pz[static_cast<std::size_t>(m.ez)];
    return acc;
  }

  // Fixed rendering, e.g. "-1*x*y*z + 1*x^2 + 1*y^2 + 1*z^2 - 2". The
  // leading coefficient keeps its sign attached; later terms separate sign
  // from magnitude; the zero polynomial is "0".
  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string mag = coeff_to_string(c);
      const bool neg = !mag.empty() && mag[0] == '-';
      if (neg) mag.erase(0, 1);
      if (first) {
        if (neg) out += '-';
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      out += mag;
      const auto var = [&out](char v, int e) {
        if (e == 0) return;
        out += '*';
        out += v;
        if (e > 1) {
          out += '^';
          out += std::to_string(e);
        }
      };
      var('x', m.ex);
      var('y', m.ey);
      var('z', m.ez);
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = coeff_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

inline TracePolynomial poly_add(const TracePolynomial& a, const TracePolynomial& b) {
  return a + b;
}
inline TracePolynomial poly_mul(const TracePolynomial& a, const TracePolynomial& b) {
  return a * b;
}
inline TracePolynomial poly_scale(const TracePolynomial& a, Coeff k) { return a.scaled(k); }
inline double poly_eval(const TracePolynomial& p, double x, double y, double z) {
  return p.eval(x, y, z);
}

}  // namespace fricke
