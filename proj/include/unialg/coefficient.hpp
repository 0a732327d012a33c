#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace unialg {

using Rational = boost::multiprecision::cpp_rational;

/// Exact Gaussian rational re + im·i.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long long value) : re_(value) {}  // NOLINT: implicit on purpose, 1 and -1 read naturally
  Coefficient(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_ == 1; }
  bool is_real() const { return im_.is_zero(); }
  /// Real, nonnegative and with denominator 1.
  bool is_natural() const;

  Coefficient conj() const { return {re_, -im_}; }

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator-(const Coefficient& a) { return {-a.re_, -a.im_}; }
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }
  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Rational re_;
  Rational im_;
};

/// `a/b`, `a/b i`, or `a/b + c/d i` (integers print without denominator).
std::string to_string(const Coefficient& c);
std::string to_string(const Rational& q);

}  // namespace unialg
