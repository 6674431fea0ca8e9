#pragma once

#include "parcount/qpoly.hpp"

namespace parcount {

// Rational function num/den over Q[t], normalized: den monic, gcd(num,den)=1.
class RatFunc {
 public:
  RatFunc() : num_(QPoly::zero()), den_(QPoly::constant(Rat(1))) {}
  RatFunc(QPoly num, QPoly den);
  static RatFunc from_poly(const QPoly& p) { return RatFunc(p, QPoly::constant(Rat(1))); }
  static RatFunc constant(const Rat& c) { return from_poly(QPoly::constant(c)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == QPoly::constant(Rat(1)); }
  const QPoly& as_polynomial() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  QPoly num_, den_;
};

}  // namespace parcount
