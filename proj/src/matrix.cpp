#include "parcount/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace parcount {

Mat Mat::identity(const FieldSpec* F, int n) {
  Mat m(F, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::unit(const FieldSpec* F, int n, int i, int j, int value) {
  Mat m(F, n);
  m.set(i, j, value);
  return m;
}

Mat Mat::scalar(const FieldSpec* F, int n, int value) {
  Mat m(F, n);
  for (int i = 0; i < n; ++i) m.set(i, i, value);
  return m;
}

Mat Mat::diag(const FieldSpec* F, const std::vector<int>& d) {
  Mat m(F, static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
  return m;
}

Mat Mat::companion(const Poly& f) {
  PARCOUNT_CHECK(f.is_monic() && f.degree() >= 1, "companion needs a monic polynomial");
  const FieldSpec* F = f.field();
  int n = f.degree();
  Mat m(F, n);
  for (int i = 1; i < n; ++i) m.set(i, i - 1, 1);
  for (int i = 0; i < n; ++i) m.set(i, n - 1, F->neg(f.coeff(i)));
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat r(a.F_, a.n_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.F_->add(a.a_[i], b.a_[i]);
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat r(a.F_, a.n_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.F_->sub(a.a_[i], b.a_[i]);
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  const FieldSpec* F = a.F_;
  const int n = a.n_;
  Mat r(F, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j) {
        int w = b.at(k, j);
        if (w == 0) continue;
        r.set(i, j, F->add(r.at(i, j), F->mul(v, w)));
      }
    }
  return r;
}

Mat Mat::scaled(int c) const {
  Mat r(F_, n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(a_[i], c);
  return r;
}

Mat Mat::pow(long long e) const {
  PARCOUNT_CHECK(e >= 0, "negative matrix power");
  Mat r = identity(F_, n_);
  Mat b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Mat::commutes_with(const Mat& b) const { return (*this) * b == b * (*this); }

int Mat::trace() const {
  int t = 0;
  for (int i = 0; i < n_; ++i) t = F_->add(t, at(i, i));
  return t;
}

namespace {

// Gaussian elimination; returns (rank, det) and optionally accumulates the
// inverse into inv (expected preloaded with the identity).
std::pair<int, int> gauss(const FieldSpec* F, Mat& m, Mat* inv) {
  const int n = m.n();
  int det = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (int j = 0; j < n; ++j) {
        int t = m.at(pivot, j);
        m.set(pivot, j, m.at(rank, j));
        m.set(rank, j, t);
        if (inv) {
          t = inv->at(pivot, j);
          inv->set(pivot, j, inv->at(rank, j));
          inv->set(rank, j, t);
        }
      }
      det = F->neg(det);
    }
    int d = m.at(rank, col);
    det = F->mul(det, d);
    int di = F->inv(d);
    for (int j = 0; j < n; ++j) {
      m.set(rank, j, F->mul(m.at(rank, j), di));
      if (inv) inv->set(rank, j, F->mul(inv->at(rank, j), di));
    }
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      int f = m.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        m.set(r, j, F->sub(m.at(r, j), F->mul(f, m.at(rank, j))));
        if (inv) inv->set(r, j, F->sub(inv->at(r, j), F->mul(f, inv->at(rank, j))));
      }
    }
    ++rank;
  }
  if (rank < n) det = 0;
  return {rank, det};
}

}  // namespace

int Mat::det() const {
  Mat tmp = *this;
  return gauss(F_, tmp, nullptr).second;
}

int Mat::rank() const {
  Mat tmp = *this;
  return gauss(F_, tmp, nullptr).first;
}

std::optional<Mat> Mat::inverse() const {
  Mat tmp = *this;
  Mat inv = identity(F_, n_);
  auto [rank, d] = gauss(F_, tmp, &inv);
  if (rank < n_) return std::nullopt;
  (void)d;
  return inv;
}

Mat Mat::conjugated_by(const Mat& g) const {
  auto gi = g.inverse();
  PARCOUNT_CHECK(gi.has_value(), "conjugation by a singular matrix");
  return g * (*this) * (*gi);
}

Mat Mat::conjugated_by(const Mat& g, const Mat& g_inv) const { return g * (*this) * g_inv; }

bool Mat::is_identity() const { return *this == identity(F_, n_); }

bool Mat::is_zero() const {
  for (int v : a_)
    if (v != 0) return false;
  return true;
}

bool Mat::is_nilpotent() const { return pow(n_).is_zero(); }

Poly Mat::charpoly() const {
  // Expand det(xI - A) over permutations; n is tiny here.
  const FieldSpec* F = F_;
  std::vector<int> perm(n_);
  for (int i = 0; i < n_; ++i) perm[i] = i;
  Poly total = Poly::zero(F);
  int sign;
  auto parity = [&](const std::vector<int>& p) {
    int s = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++s;
    return s % 2;
  };
  do {
    Poly term = Poly::one(F);
    for (int i = 0; i < n_ && !term.is_zero(); ++i) {
      int j = perm[i];
      if (i == j) {
        term = term * Poly(F, {F->neg(at(i, j)), 1});
      } else {
        term = term.scaled(F->neg(at(i, j)));
      }
    }
    sign = parity(perm);
    if (sign) term = term.scaled(F->neg(1));
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  PARCOUNT_CHECK(total.is_monic() && total.degree() == n_, "characteristic polynomial not monic");
  return total;
}

std::vector<std::vector<int>> Mat::kernel_basis() const {
  // Reduce a copy, track pivot columns, read off free-column solutions.
  Mat m = *this;
  const int n = n_;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < n; ++j) {
        int t = m.at(pivot, j);
        m.set(pivot, j, m.at(rank, j));
        m.set(rank, j, t);
      }
    int di = F_->inv(m.at(rank, col));
    for (int j = 0; j < n; ++j) m.set(rank, j, F_->mul(m.at(rank, j), di));
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      int f = m.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) m.set(r, j, F_->sub(m.at(r, j), F_->mul(f, m.at(rank, j))));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<std::vector<int>> basis;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(n, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = F_->neg(m.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

long long Mat::encode() const {
  long long code = 0;
  for (int v : a_) code = code * F_->q() + v;
  return code;
}

Mat Mat::decode(const FieldSpec* F, int n, long long code) {
  Mat m(F, n);
  for (int i = n * n - 1; i >= 0; --i) {
    m.a_[i] = static_cast<int>(code % F->q());
    code /= F->q();
  }
  return m;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < a_.size(); ++i) os << (i ? ";" : "") << a_[i];
  return os.str();
}

std::vector<int> Mat::nilpotent_jordan_type() const {
  PARCOUNT_CHECK(is_nilpotent(), "jordan type of a non-nilpotent matrix");
  // blocks of size >= k: rank(M^{k-1}) - rank(M^k)
  std::vector<int> ranks{n_};
  Mat p = *this;
  while (true) {
    ranks.push_back(p.rank());
    if (ranks.back() == 0) break;
    p = p * (*this);
  }
  std::vector<int> type;
  for (size_t k = 1; k < ranks.size(); ++k) {
    long long ge_k = ranks[k - 1] - ranks[k];
    long long ge_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (long long i = 0; i < ge_k - ge_next; ++i) type.push_back(static_cast<int>(k));
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

Mat eval_poly_at(const Poly& f, const Mat& m) {
  Mat r(m.field(), m.n());
  for (int i = f.degree(); i >= 0; --i) {
    r = r * m;
    r = r + Mat::scalar(m.field(), m.n(), f.coeff(i));
  }
  return r;
}

Mat restrict_to_subspace(const Mat& m, const std::vector<std::vector<int>>& basis) {
  const FieldSpec* F = m.field();
  const int n = m.n();
  const int d = static_cast<int>(basis.size());
  PARCOUNT_CHECK(d > 0, "empty subspace basis");
  // Solve B * c = m * b_i for each basis vector via augmented elimination.
  // B is n x d with the basis as columns.
  std::vector<std::vector<int>> aug(n, std::vector<int>(d + d, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) aug[i][j] = basis[j][i];
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int k = 0; k < n; ++k) s = F->add(s, F->mul(m.at(i, k), basis[j][k]));
      aug[i][d + j] = s;
    }
  }
  // Row reduce.
  int rank = 0;
  std::vector<int> pivot_of_col(d, -1);
  for (int col = 0; col < d && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (aug[r][col] != 0) {
        pivot = r;
        break;
      }
    PARCOUNT_CHECK(pivot >= 0, "subspace basis is linearly dependent");
    std::swap(aug[pivot], aug[rank]);
    int di = F->inv(aug[rank][col]);
    for (int j = 0; j < 2 * d; ++j) aug[rank][j] = F->mul(aug[rank][j], di);
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      int f = aug[r][col];
      if (f == 0) continue;
      for (int j = 0; j < 2 * d; ++j) aug[r][j] = F->sub(aug[r][j], F->mul(f, aug[rank][j]));
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  PARCOUNT_CHECK(rank == d, "subspace basis is linearly dependent");
  // Consistency: rows beyond rank must be zero on the right half.
  for (int r = rank; r < n; ++r)
    for (int j = 0; j < d; ++j)
      PARCOUNT_CHECK(aug[r][d + j] == 0, "subspace not invariant under the map");
  Mat out(F, d);
  for (int col = 0; col < d; ++col)
    for (int j = 0; j < d; ++j) out.set(col, j, aug[pivot_of_col[col]][d + j]);
  return out;
}

}  // namespace parcount
