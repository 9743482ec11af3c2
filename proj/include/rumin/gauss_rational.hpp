#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

namespace rumin {

using Rational = mpq_class;

inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "num/den" with an explicit denominator, also for integers.
inline std::string to_exact_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Element of Q(i). Both parts are kept canonical by GMP.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  /// |x|^2, always a non-negative rational.
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Exact text form: "p/q" for reals, "p/q+r/si" otherwise.
  std::string str() const {
    if (is_real()) return to_exact_string(re_);
    std::string s = to_exact_string(re_);
    s += sgn(im_) < 0 ? "-" : "+";
    s += to_exact_string(abs(im_));
    s += "i";
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussRational& g) { return os << g.str(); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussRational& GaussRational::operator/=(const GaussRational& o) {
  const Rational d = o.norm_sq();
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

}  // namespace rumin
