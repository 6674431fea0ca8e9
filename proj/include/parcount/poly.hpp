#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parcount/field.hpp"

namespace parcount {

// Univariate polynomial over a FieldSpec, coefficients ascending, always
// normalized (no trailing zeros). degree() of the zero polynomial is the
// sentinel kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(const FieldSpec* F, std::vector<int> coeffs);
  static Poly zero(const FieldSpec* F) { return Poly(F, {}); }
  static Poly one(const FieldSpec* F) { return Poly(F, {1}); }
  static Poly x(const FieldSpec* F) { return Poly(F, {0, 1}); }
  static Poly constant(const FieldSpec* F, int c) { return Poly(F, {c}); }

  const FieldSpec* field() const { return F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<int>& coeffs() const { return c_; }

  Poly monic() const;
  Poly derivative() const;
  int eval(int a) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(int c) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Lexicographic on (degree, then coefficients from the top down).
  friend bool operator<(const Poly& a, const Poly& b);

  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic
  static Poly pow_mod(const Poly& base, long long e, const Poly& mod);

  std::string to_string() const;  // human form, e.g. "x^2+x+1"

 private:
  const FieldSpec* F_ = nullptr;
  std::vector<int> c_;
};

// Factorization into monic irreducibles with multiplicities, ordered by
// (degree, lexicographic). Rejects the zero polynomial; requires monic input.
std::vector<std::pair<Poly, int>> poly_factor(const Poly& f);

bool is_irreducible(const Poly& f);

// Monic irreducibles of degree d over F, ascending; count via the
// necklace formula is asserted in tests.
Poly lowest_irreducible_of_degree(const FieldSpec* F, int d);
long long count_monic_irreducibles(long long q, int d);

}  // namespace parcount
