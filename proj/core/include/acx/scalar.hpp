#pragma once

#include <gmpxx.h>
#include <string>

namespace acx {

/// Arbitrary-precision rational, always kept canonical
/// (positive denominator, coprime with the numerator).
using Rat = mpq_class;

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

/// True if r is the square of a rational; on success *root is the
/// non-negative square root.
bool rat_sqrt(const Rat& r, Rat* root);

/// Gaussian rational a + bi. The coefficient field of every form,
/// matrix and subspace in this library; all arithmetic is exact.
struct Scalar {
  Rat re, im;

  Scalar() : re(0), im(0) {}
  Scalar(long n) : re(n), im(0) {}
  Scalar(const Rat& r) : re(r), im(0) {}
  Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  Scalar(long rn, long rd, long in, long id);

  static Scalar i() { return Scalar(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }
  Rat norm2() const { return re * re + im * im; }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical rendering "a+bi": zero parts omitted, unit imaginary
  /// coefficients rendered as "i"/"-i", rationals as "p/q".
  std::string str() const;
};

Scalar scalar_from_string(const std::string& s);

}  // namespace acx
