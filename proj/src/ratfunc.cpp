#include "parcount/ratfunc.hpp"

namespace parcount {

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  PARCOUNT_CHECK(!den_.is_zero(), "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly::constant(Rat(1));
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = QPoly::div_exact(num_, g);
    den_ = QPoly::div_exact(den_, g);
  }
  Rat lead = den_.coeff(den_.degree());
  if (lead != 1) {
    den_ = den_.scaled(Rat(1) / lead);
    num_ = num_.scaled(Rat(1) / lead);
  }
}

const QPoly& RatFunc::as_polynomial() const {
  PARCOUNT_CHECK(is_polynomial(), "rational function is not a polynomial: " + to_string());
  return num_;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  PARCOUNT_CHECK(!b.is_zero(), "division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string("t");
  return "(" + num_.to_string("t") + ")/(" + den_.to_string("t") + ")";
}

}  // namespace parcount
