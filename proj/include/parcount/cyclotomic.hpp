#pragma once

#include <string>
#include <vector>

#include "parcount/common.hpp"
#include "parcount/field.hpp"

namespace parcount {

// Element of Z[zeta_p], zeta_p a primitive p-th root of unity, stored on the
// basis 1, zeta, ..., zeta^{p-2} (reduction modulo the p-th cyclotomic
// polynomial). All arithmetic exact.
class CycInt {
 public:
  explicit CycInt(int p) : p_(p), c_(p - 1, 0) {}
  static CycInt zero(int p) { return CycInt(p); }
  static CycInt one(int p) {
    CycInt r(p);
    r.c_[0] = 1;
    return r;
  }
  static CycInt from_int(int p, long long v) {
    CycInt r(p);
    r.c_[0] = v;
    return r;
  }
  // zeta^e, exponent taken mod p.
  static CycInt zeta_pow(int p, long long e);

  int p() const { return p_; }
  bool is_zero() const;
  const std::vector<long long>& coords() const { return c_; }

  friend CycInt operator+(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt scaled(long long v) const;
  // Exact division by an integer; throws InvariantError if not divisible.
  CycInt divided_exact(long long v) const;
  friend bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int p_;
  std::vector<long long> c_;
};

// zeta^{Tr(x)} for the absolute trace Tr : F_{p^k} -> F_p. Multiplicative in
// addition: char(x+y) = char(x) * char(y).
CycInt additive_char(const FieldSpec* F, int x);

}  // namespace parcount
