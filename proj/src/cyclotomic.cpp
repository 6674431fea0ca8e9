#include "parcount/cyclotomic.hpp"

#include <sstream>

namespace parcount {

CycInt CycInt::zeta_pow(int p, long long e) {
  CycInt r(p);
  long long m = ((e % p) + p) % p;
  if (m < p - 1) {
    r.c_[m] = 1;
  } else {
    // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    for (auto& c : r.c_) c = -1;
  }
  return r;
}

bool CycInt::is_zero() const {
  for (long long c : c_)
    if (c != 0) return false;
  return true;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
  PARCOUNT_CHECK(a.p_ == b.p_, "cyclotomic rings differ");
  CycInt r(a.p_);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
  PARCOUNT_CHECK(a.p_ == b.p_, "cyclotomic rings differ");
  CycInt r(a.p_);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  PARCOUNT_CHECK(a.p_ == b.p_, "cyclotomic rings differ");
  const int p = a.p_;
  // Convolve on exponents mod p, then eliminate zeta^{p-1}.
  std::vector<long long> full(p, 0);
  for (int i = 0; i < p - 1; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < p - 1; ++j) {
      if (b.c_[j] == 0) continue;
      full[(i + j) % p] += a.c_[i] * b.c_[j];
    }
  }
  CycInt r(p);
  long long top = full[p - 1];
  for (int i = 0; i < p - 1; ++i) r.c_[i] = full[i] - top;
  return r;
}

CycInt CycInt::scaled(long long v) const {
  CycInt r(p_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * v;
  return r;
}

CycInt CycInt::divided_exact(long long v) const {
  PARCOUNT_CHECK(v != 0, "division by zero");
  CycInt r(p_);
  for (size_t i = 0; i < c_.size(); ++i) {
    PARCOUNT_CHECK(c_[i] % v == 0, "inexact cyclotomic division");
    r.c_[i] = c_[i] / v;
  }
  return r;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < p_ - 1; ++i) {
    if (c_[i] == 0) continue;
    if (!first && c_[i] > 0) os << "+";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] == -1)
        os << "-";
      else if (c_[i] != 1)
        os << c_[i] << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

CycInt additive_char(const FieldSpec* F, int x) {
  return CycInt::zeta_pow(F->p(), F->trace(x));
}

}  // namespace parcount
