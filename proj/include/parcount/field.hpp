#pragma once

#include <memory>
#include <string>
#include <vector>

#include "parcount/common.hpp"

namespace parcount {

// Exact arithmetic in F_{p^k}. Elements are indices 0..q-1 encoding the
// polynomial representative c_0 + c_1 x + ... + c_{k-1} x^{k-1} as
// c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Index order is the canonical
// element order used by every deterministic enumeration in the project.
//
// The modulus is the lowest monic irreducible of degree k, comparing
// coefficient tuples (c_{k-1}, ..., c_0) lexicographically. For k = 1 the
// modulus is the placeholder x, and the field is the plain prime field.
class FieldSpec {
 public:
  // Registry accessor; specs are immutable and shared. Throws ConfigError
  // for non-prime p, k < 1, or q beyond the table cap.
  static std::shared_ptr<const FieldSpec> get(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  long long q() const { return q_; }
  // Monic modulus, ascending coefficients, length k+1.
  const std::vector<int>& modulus() const { return modulus_; }

  // Characteristic is very good for GL_n at every p.
  bool very_good_for_gl(int /*n*/) const { return true; }

  int zero() const { return 0; }
  int one() const { return 1; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int frobenius(int a) const { return frob_[a]; }
  // Absolute trace to F_p, returned as a residue 0..p-1.
  int trace(int a) const { return trace_[a]; }

  // Element <-> coefficient vector (length k, residues mod p).
  std::vector<int> coeffs(int a) const;
  int from_coeffs(const std::vector<int>& c) const;

  // Embeds a prime-subfield residue; identity on indices 0..p-1.
  int from_int(long long v) const;

  std::string element_str(int a) const;
  // "p^k/c0,c1,...,ck" with the modulus coefficients ascending.
  std::string to_string() const;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  FieldSpec(int p, int k, std::vector<int> modulus);
  void build_tables();

  int p_ = 0;
  int k_ = 0;
  long long q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_;
  std::vector<int> neg_, inv_, frob_, trace_;
};

bool is_prime(long long n);

// Convenience value type for tests and non-hot-path code.
struct Fq {
  const FieldSpec* F = nullptr;
  int v = 0;

  Fq() = default;
  Fq(const FieldSpec* f, int val) : F(f), v(val) {}

  friend Fq operator+(Fq a, Fq b) { return {a.F, a.F->add(a.v, b.v)}; }
  friend Fq operator-(Fq a, Fq b) { return {a.F, a.F->sub(a.v, b.v)}; }
  friend Fq operator*(Fq a, Fq b) { return {a.F, a.F->mul(a.v, b.v)}; }
  friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
  Fq inverse() const { return {F, F->inv(v)}; }
};

}  // namespace parcount
