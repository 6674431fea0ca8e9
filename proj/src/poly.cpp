#include "parcount/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace parcount {

Poly::Poly(const FieldSpec* F, std::vector<int> coeffs) : F_(F), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  PARCOUNT_CHECK(!is_zero(), "monic() of zero polynomial");
  if (c_.back() == 1) return *this;
  return scaled(F_->inv(c_.back()));
}

Poly Poly::derivative() const {
  std::vector<int> d;
  for (int i = 1; i <= degree(); ++i) {
    int c = F_->mul(c_[i], F_->from_int(i));
    d.push_back(c);
  }
  return Poly(F_, std::move(d));
}

int Poly::eval(int a) const {
  int r = 0;
  for (int i = degree(); i >= 0; --i) r = F_->add(F_->mul(r, a), c_[i]);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  const FieldSpec* F = a.F_ ? a.F_ : b.F_;
  std::vector<int> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F->add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(F, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  const FieldSpec* F = a.F_ ? a.F_ : b.F_;
  std::vector<int> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F->sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(F, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.F_ ? a.F_ : b.F_, {});
  const FieldSpec* F = a.F_;
  std::vector<int> r(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = F->add(r[i + j], F->mul(a.c_[i], b.c_[j]));
  return Poly(F, std::move(r));
}

Poly Poly::scaled(int c) const {
  std::vector<int> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = F_->mul(c_[i], c);
  return Poly(F_, std::move(r));
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  PARCOUNT_CHECK(!b.is_zero(), "division by zero polynomial");
  const FieldSpec* F = b.F_;
  if (a.degree() < b.degree()) return {Poly(F, {}), a};
  std::vector<int> rem = a.c_;
  std::vector<int> quot(a.degree() - b.degree() + 1, 0);
  int lead_inv = F->inv(b.c_.back());
  for (int i = a.degree(); i >= b.degree(); --i) {
    int c = static_cast<int>(rem.size()) > i ? rem[i] : 0;
    if (c == 0) continue;
    int f = F->mul(c, lead_inv);
    quot[i - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j)
      rem[i - b.degree() + j] = F->sub(rem[i - b.degree() + j], F->mul(f, b.c_[j]));
  }
  return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Poly Poly::pow_mod(const Poly& base, long long e, const Poly& mod) {
  Poly r = Poly::one(mod.field());
  Poly b = divmod(base, mod).second;
  while (e > 0) {
    if (e & 1) r = divmod(r * b, mod).second;
    b = divmod(b * b, mod).second;
    e >>= 1;
  }
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    bool unit = c_[i] == 1;
    if (i == 0 || !unit) os << F_->element_str(c_[i]);
    if (i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Replaces x by x^(1/p): valid when f' = 0, i.e. only exponents divisible
// by p occur. Coefficient p-th roots via a^(p^(k-1)).
Poly pth_root(const Poly& f) {
  const FieldSpec* F = f.field();
  int p = F->p();
  std::vector<int> r(f.degree() / p + 1, 0);
  for (int i = 0; i <= f.degree(); i += p) {
    long long e = 1;
    for (int j = 0; j < F->k() - 1; ++j) e *= p;
    r[i / p] = F->pow(f.coeff(i), e);
  }
  return Poly(F, std::move(r));
}

// Squarefree decomposition over F_q (char p), returning (g_i, i) pairs
// with f = prod g_i^i, each g_i squarefree.
void squarefree_decompose(const Poly& f, int outer_mult, std::map<Poly, int>& out) {
  const FieldSpec* F = f.field();
  if (f.degree() == 0) return;
  Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), outer_mult * F->p(), out);
    return;
  }
  Poly c = Poly::gcd(f, d);
  Poly w = Poly::divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = Poly::gcd(w, c);
    Poly fac = Poly::divmod(w, y).first;
    // fac may be a product of distinct irreducibles; kept as a squarefree
    // chunk at multiplicity i * outer_mult.
    if (fac.degree() > 0) out[fac.monic()] += i * outer_mult;
    w = y;
    c = Poly::divmod(c, y).first;
    ++i;
  }
  // The leftover has all multiplicities divisible by p; its derivative
  // vanishes, so the recursion takes the p-th root and scales by p itself.
  if (c.degree() > 0) squarefree_decompose(c, outer_mult, out);
}

// Distinct-degree factorization of a squarefree monic polynomial:
// (product of irreducibles of degree d, d) pairs.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
  const FieldSpec* F = f.field();
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f;
  Poly h = Poly::x(F);  // x^(q^d) mod rest, built incrementally
  int d = 0;
  while (rest.degree() > 0) {
    ++d;
    if (2 * d > rest.degree()) {
      out.emplace_back(rest, rest.degree());
      break;
    }
    h = Poly::pow_mod(h, F->q(), rest);
    Poly g = Poly::gcd(rest, h - Poly::x(F));
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = Poly::divmod(rest, g).first;
      h = Poly::divmod(h, rest).second;
    }
  }
  return out;
}

uint64_t lcg_next(uint64_t& s) {
  s = s * 6364136245994567893ULL + 1442695040888963407ULL;
  return s;
}

Poly random_poly(const FieldSpec* F, int max_deg, uint64_t& seed) {
  std::vector<int> c(max_deg + 1);
  for (int i = 0; i <= max_deg; ++i) c[i] = static_cast<int>(lcg_next(seed) % F->q());
  return Poly(F, std::move(c));
}

void equal_degree_split(const Poly& f, int d, std::vector<Poly>& out);

// Cantor-Zassenhaus style splitting of a product of r >= 2 irreducibles of
// equal degree d. Exhaustive scan for tiny q^d, random splitting otherwise.
void equal_degree_split(const Poly& f, int d, std::vector<Poly>& out) {
  const FieldSpec* F = f.field();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  long long qd = 1;
  bool small = true;
  for (int i = 0; i < d; ++i) {
    qd *= F->q();
    if (qd > 4096) {
      small = false;
      break;
    }
  }
  if (small) {
    // Deterministic: scan monic degree-d candidates in canonical order.
    Poly rest = f;
    for (long long v = 0; v < qd && rest.degree() > 0; ++v) {
      std::vector<int> cand(d + 1, 0);
      long long t = v;
      for (int i = d - 1; i >= 0; --i) {
        cand[i] = static_cast<int>(t % F->q());
        t /= F->q();
      }
      std::reverse(cand.begin(), cand.begin() + d);
      cand[d] = 1;
      Poly c(F, std::move(cand));
      while (true) {
        auto [quot, rem] = Poly::divmod(rest, c);
        if (!rem.is_zero()) break;
        out.push_back(c);
        rest = quot;
      }
    }
    PARCOUNT_CHECK(rest.degree() <= 0, "exhaustive equal-degree split left a factor");
    return;
  }

  uint64_t seed = 0x9e3779b97f4a7c15ULL ^ (static_cast<uint64_t>(f.degree()) << 32) ^ static_cast<uint64_t>(F->q());
  while (true) {
    Poly h = random_poly(F, f.degree() - 1, seed);
    if (h.is_zero()) continue;
    Poly g = Poly::gcd(f, h);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, out);
      equal_degree_split(Poly::divmod(f, g).first, d, out);
      return;
    }
    Poly t;
    if (F->p() == 2) {
      // Trace map over F_2 splits in characteristic two.
      int m = F->k() * d;
      t = Poly::zero(F);
      Poly acc = Poly::divmod(h, f).second;
      for (int i = 0; i < m; ++i) {
        t = t + acc;
        acc = Poly::pow_mod(acc, 2, f);
      }
    } else {
      long long e = 1;
      for (int i = 0; i < d; ++i) e *= F->q();
      t = Poly::pow_mod(h, (e - 1) / 2, f) - Poly::one(F);
    }
    g = Poly::gcd(f, t);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, out);
      equal_degree_split(Poly::divmod(f, g).first, d, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> poly_factor(const Poly& f) {
  if (f.is_zero()) throw ConfigError("cannot factor the zero polynomial");
  PARCOUNT_CHECK(f.is_monic(), "poly_factor expects a monic polynomial");
  std::vector<std::pair<Poly, int>> result;
  if (f.degree() == 0) return result;

  std::map<Poly, int> squarefree;
  squarefree_decompose(f, 1, squarefree);

  std::map<Poly, int> factors;
  for (const auto& [part, mult] : squarefree) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irr;
      equal_degree_split(block, d, irr);
      for (const Poly& g : irr) factors[g] += mult;
    }
  }
  for (const auto& [g, m] : factors) result.emplace_back(g, m);
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Poly check = Poly::one(f.field());
  for (const auto& [g, m] : result)
    for (int i = 0; i < m; ++i) check = check * g;
  PARCOUNT_CHECK(check == f, "factor recombination mismatch");
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  auto fs = poly_factor(f.monic());
  return fs.size() == 1 && fs[0].second == 1;
}

Poly lowest_irreducible_of_degree(const FieldSpec* F, int d) {
  PARCOUNT_CHECK(d >= 1, "degree must be positive");
  if (d == 1) return Poly::x(F);
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= F->q();
  for (long long v = 0; v < count; ++v) {
    std::vector<int> c(d + 1, 0);
    long long t = v;
    for (int i = d - 1; i >= 0; --i) {
      c[i] = static_cast<int>(t % F->q());
      t /= F->q();
    }
    std::reverse(c.begin(), c.begin() + d);
    c[d] = 1;
    Poly f(F, std::move(c));
    if (is_irreducible(f)) return f;
  }
  throw InvariantError("no irreducible of requested degree (impossible)");
}

long long count_monic_irreducibles(long long q, int d) {
  // Necklace / Moebius count.
  auto mobius = [](int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    }
    if (n > 1) m = -m;
    return m;
  };
  long long total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    long long qe = 1;
    for (int i = 0; i < d / e; ++i) qe *= q;
    total += mobius(e) * qe;
  }
  return total / d;
}

}  // namespace parcount
