#include "unialg/coefficient.hpp"

namespace unialg {

bool Coefficient::is_natural() const {
  return im_.is_zero() && re_ >= 0 && boost::multiprecision::denominator(re_) == 1;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Coefficient& c) {
  if (c.is_real()) return to_string(c.re());
  if (c.re().is_zero()) return to_string(c.im()) + " i";
  if (c.im() < 0) return to_string(c.re()) + " - " + to_string(Rational(-c.im())) + " i";
  return to_string(c.re()) + " + " + to_string(c.im()) + " i";
}

}  // namespace unialg
