#pragma once

#include <string>
#include <vector>

#include "parcount/common.hpp"

namespace parcount {

// Exact univariate polynomial with rational coefficients in a formal
// symbol (rendered "q" by default). Canonical: no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  static QPoly zero() { return QPoly(); }
  static QPoly constant(const Rat& c) { return QPoly({c}); }
  static QPoly variable() { return QPoly({Rat(0), Rat(1)}); }
  // c * q^e
  static QPoly monomial(const Rat& c, int e);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rat& c) const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
  friend bool operator<(const QPoly& a, const QPoly& b) { return a.c_ < b.c_; }

  // Exact division; throws InvariantError on a nonzero remainder.
  static QPoly div_exact(const QPoly& a, const QPoly& b);
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  static QPoly gcd(QPoly a, QPoly b);  // monic

  Rat eval(const Rat& x) const;
  // substitute q -> q^d
  QPoly compose_power(int d) const;

  bool integer_coefficients() const;

  // Canonical grammar: integer (or rational) coefficients, caret powers, no
  // spaces; descending degree except that a negative leading term trades
  // places with the first positive one ("1-q" rather than "-q+1").
  std::string to_string(const std::string& var = "q") const;

 private:
  std::vector<Rat> c_;
};

}  // namespace parcount
