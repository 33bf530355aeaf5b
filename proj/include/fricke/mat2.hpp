#pragma once
// Real 2x2 matrices of determinant one, plus the handful of operations the
// numeric trace oracle needs. The validating constructor is for external
// inputs; arithmetic results are built unchecked so that honest rounding
// drift in long products never turns into a spurious rejection.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fricke {

struct Mat2 {
  double a11, a12, a21, a22;

  // Entries must be finite and det must equal 1 to 1e-12, measured relative
  // to the size of the determinant's two products: large hyperbolic elements
  // (entries ~ e^H) cannot meet an absolute bound in doubles, the relative
  // form is the check that actually survives at scale.
  Mat2(double m11, double m12, double m21, double m22)
      : a11(m11), a12(m12), a21(m21), a22(m22) {
    if (!std::isfinite(a11) || !std::isfinite(a12) || !std::isfinite(a21) ||
        !std::isfinite(a22))
      throw std::invalid_argument("Mat2: entries must be finite");
    if (det_drift() > 1e-12)
      throw std::invalid_argument("Mat2: determinant must be 1, got " +
                                  std::to_string(det()));
  }

  static Mat2 unchecked(double m11, double m12, double m21, double m22) {
    return Mat2(Raw{}, m11, m12, m21, m22);
  }

  static Mat2 identity() { return unchecked(1.0, 0.0, 0.0, 1.0); }

  double det() const { return a11 * a22 - a12 * a21; }

  // |det - 1| relative to the magnitude of the products forming it.
  double det_drift() const {
    const double scale =
        std::fmax(1.0, std::fabs(a11 * a22) + std::fabs(a12 * a21));
    return std::fabs(det() - 1.0) / scale;
  }

 private:
  struct Raw {};
  Mat2(Raw, double m11, double m12, double m21, double m22)
      : a11(m11), a12(m12), a21(m21), a22(m22) {}
};

inline Mat2 mat_mul(const Mat2& A, const Mat2& B) {
  return Mat2::unchecked(A.a11 * B.a11 + A.a12 * B.a21,  //
                         A.a11 * B.a12 + A.a12 * B.a22,  //
                         A.a21 * B.a11 + A.a22 * B.a21,  //
                         A.a21 * B.a12 + A.a22 * B.a22);
}

inline Mat2 operator*(const Mat2& A, const Mat2& B) { return mat_mul(A, B); }

// Adjugate; exact inverse for determinant-one matrices.
inline Mat2 mat_inverse(const Mat2& A) {
  return Mat2::unchecked(A.a22, -A.a12, -A.a21, A.a11);
}

inline double mat_trace(const Mat2& A) { return A.a11 + A.a22; }

// A^e by repeated squaring; negative exponents go through the adjugate.
inline Mat2 mat_pow(Mat2 base, std::int64_t e) {
  if (e < 0) {
    base = mat_inverse(base);
    e = -e;
  }
  Mat2 acc = Mat2::identity();
  while (e > 0) {
    if (e & 1) acc = mat_mul(acc, base);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base);
  }
  return acc;
}

}  // namespace fricke
