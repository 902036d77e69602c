#pragma once

// Exact coefficient field: rational functions in t = q^(1/4) with
// Gaussian-rational coefficients.
//
// Conventions:  q = t^4,  sqrt(q) = t^2,  sqrt(-q) = i*t^2.

#include <gmpxx.h>

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace polecat {

/// a + b*i with a, b rational.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class re, mpq_class im = 0)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return GaussRat(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);

  /// Throws DomainError on zero.
  GaussRat inverse() const;
  GaussRat conj() const { return GaussRat(re_, -im_); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    return a * b.inverse();
  }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Finite sum  c_low t^low + ... + c_high t^high.  The zero polynomial has
/// no coefficients; otherwise the first and last coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(GaussRat c) : LaurentPoly(std::move(c), 0) {}  // NOLINT
  LaurentPoly(GaussRat c, int exponent);
  LaurentPoly(std::vector<GaussRat> coeffs, int low);

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;
  std::span<const GaussRat> coefficients() const { return coeffs_; }
  GaussRat coeff(int exponent) const;
  const GaussRat& lowest() const { return coeffs_.front(); }
  const GaussRat& leading() const { return coeffs_.back(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussRat& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const;

  /// Exact value at t0.  Throws DomainError if t0 = 0 and low() < 0.
  GaussRat evaluate(const GaussRat& t0) const;

 private:
  void trim();

  int low_ = 0;
  std::vector<GaussRat> coeffs_;
};

/// Polynomial division with remainder; both arguments must have low() >= 0.
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient,
                 LaurentPoly& remainder);
/// Monic gcd of two ordinary polynomials (low() >= 0).
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

/// Element of Q(i)(t).
///
/// Canonical form: numerator is a Laurent polynomial, denominator an
/// ordinary polynomial with constant term exactly 1, the two coprime.
/// Equality of Scalars is therefore structural.
class Scalar {
 public:
  Scalar() : den_(GaussRat(1)) {}
  Scalar(long v) : Scalar(GaussRat(v)) {}  // NOLINT
  Scalar(GaussRat c) : num_(std::move(c)), den_(GaussRat(1)) {}  // NOLINT
  Scalar(LaurentPoly num)  // NOLINT
      : num_(std::move(num)), den_(GaussRat(1)) {}

  /// num / den; throws DomainError if den is zero.
  static Scalar fraction(LaurentPoly num, LaurentPoly den);

  static Scalar t() { return Scalar(LaurentPoly(GaussRat(1), 1)); }
  static Scalar i() { return Scalar(GaussRat::i()); }
  static Scalar q() { return Scalar(LaurentPoly(GaussRat(1), 4)); }
  static Scalar q_inv() { return Scalar(LaurentPoly(GaussRat(1), -4)); }
  static Scalar sqrt_q() { return Scalar(LaurentPoly(GaussRat(1), 2)); }
  static Scalar sqrt_minus_q() { return Scalar(LaurentPoly(GaussRat::i(), 2)); }
  /// q + 1/q, the value of a closed loop.
  static Scalar loop_value();
  /// q - 1/q.
  static Scalar q_minus_q_inv();

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_laurent() const { return den_.high() == 0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DomainError when dividing by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  /// Integer power; negative exponents invert (DomainError on zero).
  Scalar pow(int exponent) const;
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  /// Canonical text, e.g. "(t^8 + 1)/t^4".  Equal scalars render
  /// identically and vice versa.
  std::string to_string() const;

  /// Value at t = t0.  Throws DomainError at a pole.
  std::complex<double> eval(const GaussRat& t0) const;
  /// Exact value at t = t0.
  GaussRat eval_exact(const GaussRat& t0) const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::string to_string(const GaussRat& c);

}  // namespace polecat
