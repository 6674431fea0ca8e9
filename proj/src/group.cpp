#include "parcount/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace parcount {

std::string to_string(GroupKind k) { return k == GroupKind::GL ? "GL" : "SL"; }

GroupSpec::GroupSpec(GroupKind k, int rank, std::shared_ptr<const FieldSpec> f)
    : kind(k), n(rank), field(std::move(f)) {
  if (n < 1) throw ConfigError("group rank must be >= 1");
}

long long gl_order(long long q, int n) {
  // prod_{i=0}^{n-1} (q^n - q^i)
  long long qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  long long ord = 1;
  long long qi = 1;
  for (int i = 0; i < n; ++i) {
    ord *= (qn - qi);
    qi *= q;
  }
  return ord;
}

long long GroupSpec::order() const {
  long long ord = gl_order(q(), n);
  if (kind == GroupKind::SL) ord /= (q() - 1);
  return ord;
}

long long GroupSpec::lie_size() const {
  int dim = n * n - (kind == GroupKind::SL ? 1 : 0);
  long long s = 1;
  for (int i = 0; i < dim; ++i) s *= q();
  return s;
}

long long GroupSpec::order_p_part() const {
  long long r = 1;
  long long o = order();
  while (o % field->p() == 0) {
    r *= field->p();
    o /= field->p();
  }
  return r;
}

long long GroupSpec::order_p_prime_part() const { return order() / order_p_part(); }

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  os << parcount::to_string(kind) << n << "(q=" << q() << ")";
  return os.str();
}

ParabolicSpec::ParabolicSpec(std::vector<int> c) : comp(std::move(c)) {
  if (comp.empty()) throw ConfigError("empty composition");
  for (int x : comp)
    if (x < 1) throw ConfigError("composition parts must be positive");
}

int ParabolicSpec::n() const { return std::accumulate(comp.begin(), comp.end(), 0); }

int ParabolicSpec::block_of(int i) const {
  int acc = 0;
  for (size_t b = 0; b < comp.size(); ++b) {
    acc += comp[b];
    if (i < acc) return static_cast<int>(b);
  }
  throw InvariantError("row index outside composition");
}

int ParabolicSpec::dim_u() const {
  int d = 0;
  for (size_t i = 0; i < comp.size(); ++i)
    for (size_t j = i + 1; j < comp.size(); ++j) d += comp[i] * comp[j];
  return d;
}

int ParabolicSpec::dim_p() const {
  int d = dim_u();
  for (int x : comp) d += x * x;
  return d;
}

long long ParabolicSpec::levi_order(const GroupSpec& g) const {
  long long ord = 1;
  for (int x : comp) ord *= gl_order(g.q(), x);
  if (g.kind == GroupKind::SL) ord /= (g.q() - 1);
  return ord;
}

long long ParabolicSpec::unipotent_order(const GroupSpec& g) const {
  long long ord = 1;
  for (int i = 0; i < dim_u(); ++i) ord *= g.q();
  return ord;
}

long long ParabolicSpec::parabolic_order(const GroupSpec& g) const {
  return levi_order(g) * unipotent_order(g);
}

std::string ParabolicSpec::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < comp.size(); ++i) os << (i ? "," : "") << comp[i];
  return os.str();
}

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("PARCOUNT_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) b.max_elements = v;
  }
  return b;
}

void Budget::require(long long size, const std::string& what) const {
  if (size > max_elements)
    throw BudgetError(what + " has exactly " + std::to_string(size) +
                      " elements, over the budget of " + std::to_string(max_elements));
}

namespace {

void check_spec(const GroupSpec& g, const ParabolicSpec& p) {
  if (p.n() != g.n)
    throw ConfigError("composition " + p.to_string() + " does not sum to n=" + std::to_string(g.n));
}

// Odometer over a set of free positions (row-major most significant first);
// returns every matrix whose free entries range over the field and whose
// other entries equal `base`, subject to `keep`.
std::vector<Mat> enumerate_pattern(const GroupSpec& g, const Mat& base,
                                   const std::vector<std::pair<int, int>>& free_pos,
                                   const std::function<bool(const Mat&)>& keep) {
  const FieldSpec* F = g.F();
  std::vector<Mat> out;
  Mat m = base;
  std::vector<int> digits(free_pos.size(), 0);
  while (true) {
    if (keep == nullptr || keep(m)) out.push_back(m);
    int i = static_cast<int>(digits.size()) - 1;
    while (i >= 0) {
      if (++digits[i] < F->q()) {
        m.set(free_pos[i].first, free_pos[i].second, digits[i]);
        break;
      }
      digits[i] = 0;
      m.set(free_pos[i].first, free_pos[i].second, 0);
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<std::pair<int, int>> all_positions(int n) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pos.emplace_back(i, j);
  return pos;
}

std::vector<std::pair<int, int>> pattern_positions(const ParabolicSpec& p, int n, bool upper,
                                                   bool diag_blocks) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int bi = p.block_of(i), bj = p.block_of(j);
      if ((upper && bi < bj) || (diag_blocks && bi == bj)) pos.emplace_back(i, j);
    }
  return pos;
}

bool det_keep(const GroupSpec& g, const Mat& m) {
  int d = m.det();
  if (g.kind == GroupKind::SL) return d == 1;
  return d != 0;
}

bool trace_keep(const GroupSpec& g, const Mat& m) {
  if (g.kind == GroupKind::SL) return m.trace() == 0;
  return true;
}

}  // namespace

bool in_parabolic_pattern(const Mat& m, const ParabolicSpec& p) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (p.block_of(i) > p.block_of(j) && m.at(i, j) != 0) return false;
  return true;
}

bool in_levi_pattern(const Mat& m, const ParabolicSpec& p) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (p.block_of(i) != p.block_of(j) && m.at(i, j) != 0) return false;
  return true;
}

bool in_nilradical_pattern(const Mat& m, const ParabolicSpec& p) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (p.block_of(i) >= p.block_of(j) && m.at(i, j) != 0) return false;
  return true;
}

bool in_unipotent_radical(const Mat& m, const ParabolicSpec& p) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      int bi = p.block_of(i), bj = p.block_of(j);
      if (bi > bj && m.at(i, j) != 0) return false;
      if (bi == bj && m.at(i, j) != (i == j ? 1 : 0)) return false;
    }
  return true;
}

Mat levi_projection(const Mat& m, const ParabolicSpec& p) {
  Mat r(m.field(), m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (p.block_of(i) == p.block_of(j)) r.set(i, j, m.at(i, j));
  return r;
}

std::vector<Mat> enumerate_group(const GroupSpec& g, const Budget& b) {
  b.require(g.order(), to_string(g.kind) + "_" + std::to_string(g.n) + "(F_" + std::to_string(g.q()) + ")");
  Mat base(g.F(), g.n);
  return enumerate_pattern(g, base, all_positions(g.n), [&](const Mat& m) { return det_keep(g, m); });
}

std::vector<Mat> enumerate_parabolic(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  check_spec(g, p);
  b.require(p.parabolic_order(g), "parabolic subgroup");
  Mat base(g.F(), g.n);
  auto pos = pattern_positions(p, g.n, true, true);
  return enumerate_pattern(g, base, pos, [&](const Mat& m) { return det_keep(g, m); });
}

std::vector<Mat> enumerate_levi(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  check_spec(g, p);
  b.require(p.levi_order(g), "Levi subgroup");
  Mat base(g.F(), g.n);
  auto pos = pattern_positions(p, g.n, false, true);
  return enumerate_pattern(g, base, pos, [&](const Mat& m) { return det_keep(g, m); });
}

std::vector<Mat> enumerate_unipotent_radical(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  check_spec(g, p);
  b.require(p.unipotent_order(g), "unipotent radical");
  Mat base = Mat::identity(g.F(), g.n);
  auto pos = pattern_positions(p, g.n, true, false);
  return enumerate_pattern(g, base, pos, nullptr);
}

std::vector<Mat> enumerate_lie_algebra(const GroupSpec& g, const Budget& b) {
  b.require(g.lie_size(), "Lie algebra");
  Mat base(g.F(), g.n);
  return enumerate_pattern(g, base, all_positions(g.n), [&](const Mat& m) { return trace_keep(g, m); });
}

std::vector<Mat> enumerate_lie_parabolic(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  check_spec(g, p);
  long long size = 1;
  for (int i = 0; i < p.dim_p(); ++i) size *= g.q();
  b.require(size, "parabolic subalgebra");
  Mat base(g.F(), g.n);
  auto pos = pattern_positions(p, g.n, true, true);
  return enumerate_pattern(g, base, pos, [&](const Mat& m) { return trace_keep(g, m); });
}

std::vector<Mat> enumerate_lie_levi(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  check_spec(g, p);
  long long size = 1;
  for (int x : p.comp)
    for (int i = 0; i < x * x; ++i) size *= g.q();
  b.require(size, "Levi subalgebra");
  Mat base(g.F(), g.n);
  auto pos = pattern_positions(p, g.n, false, true);
  return enumerate_pattern(g, base, pos, [&](const Mat& m) { return trace_keep(g, m); });
}

std::vector<Mat> enumerate_nilradical(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  check_spec(g, p);
  b.require(p.unipotent_order(g), "nilradical");
  Mat base(g.F(), g.n);
  auto pos = pattern_positions(p, g.n, true, false);
  return enumerate_pattern(g, base, pos, nullptr);
}

long long centralizer_order(const GroupSpec& g, const Mat& x, const Budget& b) {
  auto group = enumerate_group(g, b);
  long long count = 0;
  for (const Mat& h : group)
    if (h.commutes_with(x)) ++count;
  return count;
}

long long burnside_count(const std::vector<Mat>& acting, const std::vector<Mat>& acted,
                         const std::function<Mat(const Mat&, const Mat&)>& action) {
  long long total = 0;
  for (const Mat& h : acting) {
    for (const Mat& s : acted)
      if (action(h, s) == s) ++total;
  }
  PARCOUNT_CHECK(!acting.empty() && total % static_cast<long long>(acting.size()) == 0,
                 "Burnside sum not divisible by the acting order");
  return total / static_cast<long long>(acting.size());
}

long long burnside_conjugation(const std::vector<Mat>& acting, const std::vector<Mat>& acted) {
  // Fixed points of conjugation are commuting pairs; no inverse needed.
  long long total = 0;
  for (const Mat& h : acting)
    for (const Mat& s : acted)
      if (h * s == s * h) ++total;
  PARCOUNT_CHECK(!acting.empty() && total % static_cast<long long>(acting.size()) == 0,
                 "Burnside sum not divisible by the acting order");
  return total / static_cast<long long>(acting.size());
}

namespace {

std::string transversal_key(const GroupSpec& g, const ParabolicSpec& p) {
  return g.to_string() + "/" + p.to_string() + "/" + g.F()->to_string();
}

}  // namespace

std::shared_ptr<const std::vector<Mat>> coset_transversal(const GroupSpec& g, const ParabolicSpec& p,
                                                          const Budget& b) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const std::vector<Mat>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(transversal_key(g, p));
    if (it != cache.end()) return it->second;
  }
  check_spec(g, p);
  auto group = enumerate_group(g, b);
  long long index = g.order() / p.parabolic_order(g);
  auto reps = std::make_shared<std::vector<Mat>>();
  std::vector<Mat> rep_invs;
  for (const Mat& m : group) {
    bool found = false;
    for (const Mat& ri : rep_invs) {
      // m in r P  <=>  r^{-1} m in P
      if (in_parabolic_pattern(ri * m, p)) {
        found = true;
        break;
      }
    }
    if (!found) {
      reps->push_back(m);
      rep_invs.push_back(*m.inverse());
      if (static_cast<long long>(reps->size()) == index) break;
    }
  }
  PARCOUNT_CHECK(static_cast<long long>(reps->size()) == index, "transversal size mismatch");
  std::lock_guard<std::mutex> lock(mu);
  cache[transversal_key(g, p)] = reps;
  return reps;
}

long long f_parabolic_group(const GroupSpec& g, const ParabolicSpec& p, const Mat& x, const Budget& b) {
  auto reps = coset_transversal(g, p, b);
  long long count = 0;
  for (const Mat& r : *reps) {
    Mat y = x.conjugated_by(*r.inverse(), r);
    if (in_parabolic_pattern(y, p) && y.det() != 0) ++count;
  }
  return count;
}

long long f_parabolic_lie(const GroupSpec& g, const ParabolicSpec& p, const Mat& x, const Budget& b) {
  auto reps = coset_transversal(g, p, b);
  long long count = 0;
  for (const Mat& r : *reps)
    if (in_parabolic_pattern(x.conjugated_by(*r.inverse(), r), p)) ++count;
  return count;
}

long long f_nilradical_lie(const GroupSpec& g, const ParabolicSpec& p, const Mat& x, const Budget& b) {
  auto reps = coset_transversal(g, p, b);
  long long count = 0;
  for (const Mat& r : *reps)
    if (in_nilradical_pattern(x.conjugated_by(*r.inverse(), r), p)) ++count;
  return count;
}

std::vector<OrbitInfo> orbit_partition(const GroupSpec& g, const std::vector<Mat>& set, const Budget& b) {
  auto group = enumerate_group(g, b);
  std::vector<std::pair<Mat, Mat>> gens;  // (g, g^{-1}) pairs, full scan
  gens.reserve(group.size());
  for (const Mat& h : group) gens.emplace_back(h, *h.inverse());

  std::unordered_set<long long> in_set;
  for (const Mat& m : set) in_set.insert(m.encode());
  std::unordered_set<long long> visited;
  std::vector<OrbitInfo> orbits;
  for (const Mat& m : set) {
    long long code = m.encode();
    if (visited.count(code)) continue;
    OrbitInfo info;
    info.rep = m;
    long long size = 0;
    for (const auto& [h, hi] : gens) {
      Mat y = m.conjugated_by(h, hi);
      long long yc = y.encode();
      PARCOUNT_CHECK(in_set.count(yc) > 0, "orbit left the enumerated set");
      if (visited.insert(yc).second) ++size;
    }
    info.size = size;
    info.centralizer = static_cast<long long>(group.size()) / size;
    PARCOUNT_CHECK(info.centralizer * size == static_cast<long long>(group.size()),
                   "orbit size does not divide the group order");
    orbits.push_back(std::move(info));
  }
  return orbits;
}

std::vector<Mat> orbit_representatives(const GroupSpec& g, const std::vector<Mat>& set,
                                       const std::vector<Mat>& filter, const Budget& b) {
  auto orbits = orbit_partition(g, set, b);
  if (filter.empty()) {
    std::vector<Mat> reps;
    for (const auto& o : orbits) reps.push_back(o.rep);
    return reps;
  }
  std::unordered_set<long long> filter_codes;
  for (const Mat& m : filter) filter_codes.insert(m.encode());
  auto group = enumerate_group(g, b);
  std::vector<Mat> reps;
  for (const auto& o : orbits) {
    bool meets = false;
    for (const Mat& h : group) {
      if (filter_codes.count(o.rep.conjugated_by(h, *h.inverse()).encode())) {
        meets = true;
        break;
      }
    }
    if (meets) reps.push_back(o.rep);
  }
  return reps;
}

}  // namespace parcount
