#include "parcount/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace parcount {

namespace {

constexpr long long kMaxTableQ = 2048;  // table-based fields only; desk scale

// Dense polynomial arithmetic over F_p on coefficient vectors, used only
// for modulus search and table construction.
std::vector<int> trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul_mod_p(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(std::move(r));
}

// Remainder of a by monic m.
std::vector<int> poly_rem_mod_p(std::vector<int> a, const std::vector<int>& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int da = static_cast<int>(a.size()) - 1;
    int c = a[da];
    if (c != 0) {
      for (int i = 0; i <= dm; ++i) {
        int& t = a[da - dm + i];
        t = ((t - c * m[i]) % p + p) % p;
      }
    }
    a.pop_back();
    a = trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

bool divides(const std::vector<int>& d, const std::vector<int>& f, int p) {
  // d monic; true iff d | f.
  std::vector<int> r = poly_rem_mod_p(f, d, p);
  return r.empty();
}

bool is_irreducible_mod_p(const std::vector<int>& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      std::vector<int> cand(d + 1, 0);
      long long t = v;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<int>(t % p);
        t /= p;
      }
      cand[d] = 1;
      if (divides(cand, f, p)) return false;
    }
  }
  return true;
}

std::vector<int> lowest_irreducible(int p, int k) {
  if (k == 1) return {0, 1};  // x
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  // v's base-p digits give (c_{k-1}, ..., c_0) most significant first, so
  // ascending v is ascending lexicographic on that tuple.
  for (long long v = 0; v < count; ++v) {
    std::vector<int> f(k + 1, 0);
    f[k] = 1;
    long long t = v;
    for (int i = k - 1; i >= 0; --i) {
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    std::reverse(f.begin(), f.begin() + k);
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw InvariantError("no irreducible modulus found (impossible)");
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < k; ++i) q_ *= p;
  build_tables();
}

void FieldSpec::build_tables() {
  const long long q = q_;
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  frob_.assign(q, 0);
  trace_.assign(q, 0);

  auto decode = [&](long long v) {
    std::vector<int> c(k_, 0);
    for (int i = 0; i < k_; ++i) {
      c[i] = static_cast<int>(v % p_);
      v /= p_;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    long long v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p_ + c[i];
    return v;
  };

  for (long long a = 0; a < q; ++a) {
    std::vector<int> ca = decode(a);
    std::vector<int> nc(k_);
    for (int i = 0; i < k_; ++i) nc[i] = (p_ - ca[i]) % p_;
    neg_[a] = static_cast<int>(encode(nc));
    for (long long b = 0; b < q; ++b) {
      std::vector<int> cb = decode(b);
      std::vector<int> cs(k_);
      for (int i = 0; i < k_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
      add_[a * q + b] = static_cast<int>(encode(cs));
      if (k_ == 1) {
        mul_[a * q + b] = static_cast<int>((a * b) % p_);
      } else {
        std::vector<int> prod = poly_mul_mod_p(trim(ca), trim(cb), p_);
        prod = poly_rem_mod_p(std::move(prod), modulus_, p_);
        prod.resize(k_, 0);
        mul_[a * q + b] = static_cast<int>(encode(prod));
      }
    }
  }
  for (long long a = 0; a < q; ++a) {
    if (a != 0) {
      for (long long b = 0; b < q; ++b)
        if (mul_[a * q + b] == 1) {
          inv_[a] = static_cast<int>(b);
          break;
        }
    }
    int f = static_cast<int>(a);
    for (int i = 0; i < p_ - 1; ++i) f = mul_[static_cast<long long>(f) * q + a];
    frob_[a] = f;  // a^p
  }
  for (long long a = 0; a < q; ++a) {
    int t = static_cast<int>(a);
    int acc = static_cast<int>(a);
    for (int i = 1; i < k_; ++i) {
      acc = frob_[acc];
      t = add_[static_cast<long long>(t) * q + acc];
    }
    PARCOUNT_CHECK(t < p_, "absolute trace left the prime subfield");
    trace_[a] = t;
  }
}

int FieldSpec::inv(int a) const {
  if (a == 0) throw ConfigError("division by zero in F_" + std::to_string(q_));
  return inv_[a];
}

int FieldSpec::pow(int a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  int r = 1, b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<int> FieldSpec::coeffs(int a) const {
  std::vector<int> c(k_, 0);
  long long v = a;
  for (int i = 0; i < k_; ++i) {
    c[i] = static_cast<int>(v % p_);
    v /= p_;
  }
  return c;
}

int FieldSpec::from_coeffs(const std::vector<int>& c) const {
  long long v = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    int d = i < static_cast<int>(c.size()) ? ((c[i] % p_) + p_) % p_ : 0;
    v = v * p_ + d;
  }
  return static_cast<int>(v);
}

int FieldSpec::from_int(long long v) const {
  return static_cast<int>(((v % p_) + p_) % p_);
}

std::string FieldSpec::element_str(int a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream os;
  auto c = coeffs(a);
  os << "(";
  for (int i = 0; i < k_; ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << p_ << "^" << k_ << "/";
  for (size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

std::shared_ptr<const FieldSpec> FieldSpec::get(int p, int k) {
  if (!is_prime(p)) throw ConfigError("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw ConfigError("field extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxTableQ) throw ConfigError("field size exceeds the table cap " + std::to_string(kMaxTableQ));
  }

  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const FieldSpec>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto spec = std::shared_ptr<const FieldSpec>(new FieldSpec(p, k, lowest_irreducible(p, k)));
  registry[key] = spec;
  return spec;
}

}  // namespace parcount
