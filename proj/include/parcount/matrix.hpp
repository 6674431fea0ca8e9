#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parcount/poly.hpp"

namespace parcount {

// Dense n x n matrix over a FieldSpec; entries are element indices.
class Mat {
 public:
  Mat() = default;
  Mat(const FieldSpec* F, int n) : F_(F), n_(n), a_(static_cast<size_t>(n) * n, 0) {}
  static Mat identity(const FieldSpec* F, int n);
  static Mat unit(const FieldSpec* F, int n, int i, int j, int value = 1);
  static Mat scalar(const FieldSpec* F, int n, int value);
  static Mat diag(const FieldSpec* F, const std::vector<int>& d);
  // Companion matrix of a monic polynomial.
  static Mat companion(const Poly& f);

  const FieldSpec* field() const { return F_; }
  int n() const { return n_; }
  int at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, int v) { a_[static_cast<size_t>(i) * n_ + j] = v; }

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  Mat scaled(int c) const;
  Mat pow(long long e) const;
  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  friend bool operator<(const Mat& a, const Mat& b) { return a.a_ < b.a_; }

  bool commutes_with(const Mat& b) const;
  int det() const;
  int trace() const;
  int rank() const;
  std::optional<Mat> inverse() const;
  Mat conjugated_by(const Mat& g) const;        // g * this * g^{-1}
  Mat conjugated_by(const Mat& g, const Mat& g_inv) const;
  bool is_identity() const;
  bool is_zero() const;
  bool is_nilpotent() const;

  // det(x I - A), exact, via permutation expansion (n <= 8).
  Poly charpoly() const;

  // Basis of the right kernel, as column vectors (each length n).
  std::vector<std::vector<int>> kernel_basis() const;

  // Row-major base-q integer encoding; inverse of decode.
  long long encode() const;
  static Mat decode(const FieldSpec* F, int n, long long code);

  // Row-major semicolon-separated entry indices, e.g. "1;0;0;1".
  std::string to_string() const;

  // Jordan block-size partition of a nilpotent matrix over F_q, parts
  // descending, computed from ranks of powers.
  std::vector<int> nilpotent_jordan_type() const;

 private:
  const FieldSpec* F_ = nullptr;
  int n_ = 0;
  std::vector<int> a_;
};

// Evaluate a polynomial at a matrix.
Mat eval_poly_at(const Poly& f, const Mat& m);

// Matrix of the restriction of m to the invariant subspace spanned by the
// given basis columns; throws InvariantError if the space is not invariant.
Mat restrict_to_subspace(const Mat& m, const std::vector<std::vector<int>>& basis);

}  // namespace parcount
