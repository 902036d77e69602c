#include "polecat/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "polecat/error.hpp"

namespace polecat {

// ---------------------------------------------------------------- GaussRat

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (sgn(im_) == 0) return GaussRat(1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return GaussRat(re_ / norm, -im_ / norm);
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(GaussRat c, int exponent) : low_(exponent) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
  trim();
}

LaurentPoly::LaurentPoly(std::vector<GaussRat> coeffs, int low)
    : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const GaussRat& c) { return !c.is_zero(); });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const GaussRat& c) { return !c.is_zero(); }));
}

GaussRat LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return GaussRat();
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), GaussRat());
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + k] += o.coeffs_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t x = 0; x < a.coeffs_.size(); ++x) {
    if (a.coeffs_[x].is_zero()) continue;
    for (std::size_t y = 0; y < b.coeffs_.size(); ++y)
      out[x + y] += a.coeffs_[x] * b.coeffs_[y];
  }
  return LaurentPoly(std::move(out), a.low_ + b.low_);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const GaussRat& c) {
  if (c.is_zero()) return *this = LaurentPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

GaussRat LaurentPoly::evaluate(const GaussRat& t0) const {
  if (is_zero()) return {};
  if (t0.is_zero()) {
    if (low_ < 0) throw DomainError("evaluation of a negative power of t at t = 0");
    return low_ == 0 ? coeffs_.front() : GaussRat();
  }
  // Horner from the top, then multiply by t0^low.
  GaussRat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t0;
    acc += *it;
  }
  GaussRat base = low_ < 0 ? t0.inverse() : t0;
  for (int k = 0; k < std::abs(low_); ++k) acc *= base;
  return acc;
}

void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient,
                 LaurentPoly& remainder) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  quotient = LaurentPoly();
  remainder = a;
  const GaussRat lead_inv = b.leading().inverse();
  while (!remainder.is_zero() && remainder.high() >= b.high()) {
    const int shift = remainder.high() - b.high();
    LaurentPoly term(remainder.leading() * lead_inv, shift);
    quotient += term;
    remainder -= term * b;
  }
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly quot, rem;
    poly_divmod(a, b, quot, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return a;
  a *= a.leading().inverse();
  return a;
}

// ------------------------------------------------------------------ Scalar

Scalar Scalar::fraction(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DomainError("division by zero");
  Scalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.canonicalize();
  return s;
}

Scalar Scalar::loop_value() { return q() + q_inv(); }
Scalar Scalar::q_minus_q_inv() { return q() - q_inv(); }

bool Scalar::is_one() const {
  return is_laurent() && num_.low() == 0 && num_.high() == 0 && num_.lowest().is_one();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(GaussRat(1));
    return;
  }
  // Move the t-power content of the denominator into the numerator.
  if (den_.low() != 0) {
    num_ = num_.shifted(-den_.low());
    den_ = den_.shifted(-den_.low());
  }
  if (den_.high() > 0) {
    const int shift = num_.low();
    LaurentPoly g = poly_gcd(num_.shifted(-shift), den_);
    if (g.high() > 0) {
      LaurentPoly quot, rem;
      poly_divmod(num_.shifted(-shift), g, quot, rem);
      num_ = quot.shifted(shift);
      poly_divmod(den_, g, quot, rem);
      den_ = std::move(quot);
    }
  }
  const GaussRat& c0 = den_.lowest();
  if (!c0.is_one()) {
    const GaussRat inv = c0.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ *= o.num_;
  if (num_.is_zero()) {
    den_ = LaurentPoly(GaussRat(1));
    return *this;
  }
  if (is_laurent() && o.is_laurent()) return *this;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return fraction(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  Scalar acc(1);
  for (unsigned e = static_cast<unsigned>(std::abs(exponent)); e != 0; e >>= 1) {
    if (e & 1U) acc *= base;
    if (e > 1) base *= base;
  }
  return acc;
}

GaussRat Scalar::eval_exact(const GaussRat& t0) const {
  GaussRat d = den_.evaluate(t0);
  if (d.is_zero()) throw DomainError("evaluation at a pole");
  return num_.evaluate(t0) / d;
}

std::complex<double> Scalar::eval(const GaussRat& t0) const {
  return eval_exact(t0).to_complex();
}

// --------------------------------------------------------------- rendering

namespace {

std::string rational_text(const mpq_class& v) { return v.get_str(); }

// Renders the magnitude part of a coefficient and reports whether the term
// should be joined with a minus sign.
std::string coefficient_text(const GaussRat& c, bool has_monomial, bool& negative) {
  negative = false;
  const int re_sign = sgn(c.re());
  const int im_sign = sgn(c.im());
  if (im_sign == 0) {
    negative = re_sign < 0;
    mpq_class mag = abs(c.re());
    if (mag == 1 && has_monomial) return {};
    return rational_text(mag);
  }
  if (re_sign == 0) {
    negative = im_sign < 0;
    mpq_class mag = abs(c.im());
    if (mag == 1) return "i";
    return rational_text(mag) + "*i";
  }
  std::string out = "(" + rational_text(c.re());
  out += im_sign < 0 ? " - " : " + ";
  mpq_class mag = abs(c.im());
  out += mag == 1 ? std::string("i") : rational_text(mag) + "*i";
  out += ")";
  return out;
}

std::string monomial_text(int exponent) {
  if (exponent == 0) return {};
  if (exponent == 1) return "t";
  return "t^" + std::to_string(exponent);
}

std::string poly_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = p.high(); e >= p.low(); --e) {
    GaussRat c = p.coeff(e);
    if (c.is_zero()) continue;
    bool negative = false;
    const std::string mono = monomial_text(e);
    std::string coef = coefficient_text(c, !mono.empty(), negative);
    std::string term = coef;
    if (!coef.empty() && !mono.empty()) term += "*";
    term += mono;
    if (first) {
      out += negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(const GaussRat& c) {
  return Scalar(c).to_string();
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  LaurentPoly top = num_;
  LaurentPoly bottom = den_;
  if (num_.low() < 0) {
    top = num_.shifted(-num_.low());
    bottom = den_.shifted(-num_.low());
  }
  std::string top_text = poly_text(top);
  if (bottom.high() == 0 && bottom.low() == 0) return top_text;
  if (top.term_count() > 1) top_text = "(" + top_text + ")";
  std::string bottom_text = poly_text(bottom);
  if (bottom.term_count() > 1) bottom_text = "(" + bottom_text + ")";
  return top_text + "/" + bottom_text;
}

}  // namespace polecat
