#include "parcount/counting.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace parcount {

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::kGroup: return "group";
    case Quantity::kLieParabolic: return "lie-parabolic";
    case Quantity::kLieNilradical: return "lie-nilradical";
  }
  return "?";
}

std::optional<Quantity> quantity_from_string(const std::string& s) {
  if (s == "group") return Quantity::kGroup;
  if (s == "lie" || s == "lie-parabolic") return Quantity::kLieParabolic;
  if (s == "nil" || s == "nilradical" || s == "lie-nilradical") return Quantity::kLieNilradical;
  return std::nullopt;
}

std::string to_string(SignRule r) {
  switch (r) {
    case SignRule::kProductConstant: return "product-constant";
    case SignRule::kSumConstant: return "sum-constant";
    case SignRule::kPerTorus: return "per-torus";
  }
  return "?";
}

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

OrbitData build_orbits(const GroupSpec& g, const std::vector<Mat>& set, bool lie, const Budget& b) {
  auto group = enumerate_group(g, b);
  std::vector<std::pair<Mat, Mat>> gens;
  gens.reserve(group.size());
  for (const Mat& h : group) gens.emplace_back(h, *h.inverse());

  OrbitData data;
  data.orbit_of.reserve(set.size() * 2);
  for (const Mat& m : set) {
    long long code = m.encode();
    if (data.orbit_of.count(code)) continue;
    int idx = static_cast<int>(data.classes.size());
    long long size = 0;
    for (const auto& [h, hi] : gens) {
      long long yc = m.conjugated_by(h, hi).encode();
      if (data.orbit_of.emplace(yc, idx).second) ++size;
    }
    ClassDatum cd;
    cd.rep = m;
    cd.orbit_size = size;
    cd.centralizer = static_cast<long long>(group.size()) / size;
    PARCOUNT_CHECK(cd.centralizer * size == static_cast<long long>(group.size()),
                   "orbit size does not divide the group order");
    cd.type = lie ? type_of_lie_element(m) : type_of_group_element(m);
    data.classes.push_back(std::move(cd));
  }
  return data;
}

std::string orbits_key(const GroupSpec& g) { return g.to_string() + "#" + g.F()->to_string(); }

}  // namespace

const OrbitData& group_orbits(const GroupSpec& g, const Budget& b) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<OrbitData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = orbits_key(g) + "/group";
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto data = std::make_unique<OrbitData>(build_orbits(g, enumerate_group(g, b), false, b));
    it = cache.emplace(key, std::move(data)).first;
  }
  return *it->second;
}

const OrbitData& lie_orbits(const GroupSpec& g, const Budget& b) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<OrbitData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = orbits_key(g) + "/lie";
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto data = std::make_unique<OrbitData>(build_orbits(g, enumerate_lie_algebra(g, b), true, b));
    it = cache.emplace(key, std::move(data)).first;
  }
  return *it->second;
}

std::vector<TypeFiber> type_partition_group(const GroupSpec& g, const Budget& b) {
  auto elems = enumerate_group(g, b);
  std::map<TypeLabel, long long> fibers;
  for (const Mat& m : elems) ++fibers[type_of_group_element(m)];
  std::vector<TypeFiber> out;
  long long total = 0;
  for (const auto& [t, c] : fibers) {
    out.push_back({t, c});
    total += c;
  }
  PARCOUNT_CHECK(total == static_cast<long long>(elems.size()), "fibers must partition the group");
  return out;
}

std::vector<TypeFiber> type_partition_lie(const GroupSpec& g, const Budget& b) {
  auto elems = enumerate_lie_algebra(g, b);
  std::map<TypeLabel, long long> fibers;
  for (const Mat& m : elems) ++fibers[type_of_lie_element(m)];
  std::vector<TypeFiber> out;
  long long total = 0;
  for (const auto& [t, c] : fibers) {
    out.push_back({t, c});
    total += c;
  }
  PARCOUNT_CHECK(total == static_cast<long long>(elems.size()), "fibers must partition the algebra");
  return out;
}

namespace {

void require_formula_supported(const GroupSpec& g) {
  if (g.kind != GroupKind::GL)
    throw ConfigError("the formula engine supports GL only; use the brute engine for SL");
}

// (1/|W_L|) sum_{w in W_L} delta * Q * index for one type.
Rat inner_w_sum(const TypeLabel& type, const std::vector<int>& comp, long long q) {
  Rat sum(0);
  for (const auto& [rho, count] : levi_cycle_types(comp)) sum += Rat(count) * dl_value(type, rho, q);
  return sum / Rat(levi_weyl_order(comp));
}

long long assemble_type_sum(const GroupSpec& g, const ParabolicSpec& p,
                            const std::map<TypeLabel, long long>& class_fibers,
                            std::vector<TypeTerm>& breakdown) {
  const long long q = g.q();
  Rat total(0);
  for (const TypeLabel& type : enumerate_types_for_levi(g.n, p.comp)) {
    TypeTerm term;
    term.type = type;
    auto it = class_fibers.find(type);
    term.fiber = it == class_fibers.end() ? 0 : it->second;
    term.inner = inner_w_sum(type, p.comp, q);
    total += Rat(term.fiber) * term.inner;
    breakdown.push_back(std::move(term));
  }
  PARCOUNT_CHECK(denominator(total) == 1, "type sum is not an integer");
  return static_cast<long long>(numerator(total));
}

std::map<TypeLabel, long long> fibers_by_type(const std::vector<ClassDatum>& classes) {
  std::map<TypeLabel, long long> fibers;
  for (const auto& c : classes) ++fibers[c.type];
  return fibers;
}

long long levi_order_p_prime(const GroupSpec& g, const ParabolicSpec& p) {
  long long o = p.levi_order(g);
  while (o % g.F()->p() == 0) o /= g.F()->p();
  return o;
}

long long k_nil_formula_with_rule(const GroupSpec& g, const ParabolicSpec& p, SignRule rule,
                                  const Budget& b, std::vector<TypeTerm>* breakdown,
                                  long long* representatives) {
  require_formula_supported(g);
  const long long q = g.q();
  // R(n^F, g^F): the nilpotent Jordan types present in n^F.
  std::set<Partition> types_present;
  for (const Mat& x : enumerate_nilradical(g, p, b)) types_present.insert(Partition(x.nilpotent_jordan_type()));
  if (representatives) *representatives = static_cast<long long>(types_present.size());

  auto [eps_g, eps_l] = relative_ranks(g, p.comp);
  int const_sign;
  if (rule == SignRule::kProductConstant)
    const_sign = (eps_g * eps_l) % 2 == 0 ? 1 : -1;
  else
    const_sign = (eps_g + eps_l) % 2 == 0 ? 1 : -1;

  const GreenTable& gt = green_table(g.n);
  Rat total(0);
  for (const auto& [rho, count] : levi_cycle_types(p.comp)) {
    int sign = rule == SignRule::kPerTorus ? torus_sign(rho, g.n) : const_sign;
    Rat inner(0);
    for (const Partition& lambda : types_present) inner += gt.at(lambda, rho).eval(Rat(q));
    total += Rat(count) * Rat(sign) * inner;
  }
  total *= Rat(levi_order_p_prime(g, p));
  total /= Rat(levi_weyl_order(p.comp));
  PARCOUNT_CHECK(denominator(total) == 1, "nilradical formula value not an integer");
  if (breakdown) {
    // Per nilpotent type: fiber 1 each (each type contributes one orbit).
    for (const Partition& lambda : types_present) {
      TypeTerm t;
      t.type = TypeLabel({TypeEntry{1, g.n, lambda}});
      t.fiber = 1;
      Rat inner(0);
      for (const auto& [rho, count] : levi_cycle_types(p.comp)) {
        int sign = rule == SignRule::kPerTorus ? torus_sign(rho, g.n) : const_sign;
        inner += Rat(count) * Rat(sign) * gt.at(lambda, rho).eval(Rat(q));
      }
      t.inner = inner / Rat(levi_weyl_order(p.comp));
      breakdown->push_back(std::move(t));
    }
  }
  return static_cast<long long>(numerator(total));
}

long long k_group_brute(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  auto par = enumerate_parabolic(g, p, b);
  auto grp = enumerate_group(g, b);
  return burnside_conjugation(par, grp);
}

long long k_lie_brute(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  auto par = enumerate_lie_parabolic(g, p, b);
  auto grp = enumerate_group(g, b);
  long long total = 0;
  for (const Mat& x : par)
    for (const Mat& h : grp)
      if (h * x == x * h) ++total;
  long long order = p.parabolic_order(g);
  PARCOUNT_CHECK(total % order == 0, "parabolic count not divisible by |P^F|");
  return total / order;
}

long long k_nil_brute(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  auto nil = enumerate_nilradical(g, p, b);
  auto grp = enumerate_group(g, b);
  long long total = 0;
  for (const Mat& x : nil)
    for (const Mat& h : grp)
      if (h * x == x * h) ++total;
  long long order = p.unipotent_order(g);
  PARCOUNT_CHECK(total % order == 0, "nilradical count not divisible by |U^F|");
  return total / order;
}

}  // namespace

SignRule selected_sign_rule(const Budget& b) {
  static std::mutex mu;
  static std::optional<SignRule> cached;
  std::lock_guard<std::mutex> lock(mu);
  if (cached) return *cached;

  struct Cell {
    GroupSpec g;
    ParabolicSpec p;
  };
  std::vector<Cell> cells;
  auto f2 = FieldSpec::get(2, 1), f3 = FieldSpec::get(3, 1);
  cells.push_back({GroupSpec(GroupKind::GL, 2, f2), ParabolicSpec({1, 1})});
  cells.push_back({GroupSpec(GroupKind::GL, 2, f3), ParabolicSpec({1, 1})});
  cells.push_back({GroupSpec(GroupKind::GL, 3, f2), ParabolicSpec({1, 1, 1})});
  cells.push_back({GroupSpec(GroupKind::GL, 3, f2), ParabolicSpec({2, 1})});
  cells.push_back({GroupSpec(GroupKind::GL, 3, f2), ParabolicSpec({3})});

  for (SignRule rule : {SignRule::kProductConstant, SignRule::kSumConstant, SignRule::kPerTorus}) {
    bool ok = true;
    for (const Cell& cell : cells) {
      long long brute = k_nil_brute(cell.g, cell.p, b);
      long long formula = k_nil_formula_with_rule(cell.g, cell.p, rule, b, nullptr, nullptr);
      if (brute != formula) {
        ok = false;
        break;
      }
    }
    if (ok) {
      cached = rule;
      return rule;
    }
  }
  throw InvariantError("no sign convention matches brute force on the calibration set");
}

CountReport k_group(const GroupSpec& g, const ParabolicSpec& p, Engine e, const Budget& b) {
  CountReport r;
  r.group = g;
  r.parabolic = p;
  r.quantity = Quantity::kGroup;
  if (e != Engine::kFormula) {
    auto t0 = std::chrono::steady_clock::now();
    r.brute = k_group_brute(g, p, b);
    r.ms_brute = ms_since(t0);
  }
  if (e != Engine::kBrute) {
    auto t0 = std::chrono::steady_clock::now();
    require_formula_supported(g);
    r.formula = assemble_type_sum(g, p, fibers_by_type(group_orbits(g, b).classes), r.breakdown);
    r.ms_formula = ms_since(t0);
  }
  r.agree = r.brute && r.formula && *r.brute == *r.formula;
  return r;
}

CountReport k_lie(const GroupSpec& g, const ParabolicSpec& p, Engine e, const Budget& b) {
  if (g.kind == GroupKind::SL && g.n % g.F()->p() == 0)
    throw ConfigError("kappa degenerate: p | n");
  CountReport r;
  r.group = g;
  r.parabolic = p;
  r.quantity = Quantity::kLieParabolic;
  if (e != Engine::kFormula) {
    auto t0 = std::chrono::steady_clock::now();
    r.brute = k_lie_brute(g, p, b);
    r.ms_brute = ms_since(t0);
  }
  if (e != Engine::kBrute) {
    auto t0 = std::chrono::steady_clock::now();
    require_formula_supported(g);
    const OrbitData& orbits = lie_orbits(g, b);
    r.formula = assemble_type_sum(g, p, fibers_by_type(orbits.classes), r.breakdown);
    // |R(p^F, g^F)|: adjoint orbits meeting the parabolic subalgebra.
    std::unordered_set<int> met;
    for (const Mat& x : enumerate_lie_parabolic(g, p, b)) met.insert(orbits.orbit_of.at(x.encode()));
    r.representatives = static_cast<long long>(met.size());
    r.ms_formula = ms_since(t0);
  }
  r.agree = r.brute && r.formula && *r.brute == *r.formula;
  return r;
}

CountReport k_nil(const GroupSpec& g, const ParabolicSpec& p, Engine e, const Budget& b) {
  CountReport r;
  r.group = g;
  r.parabolic = p;
  r.quantity = Quantity::kLieNilradical;
  if (e != Engine::kFormula) {
    auto t0 = std::chrono::steady_clock::now();
    r.brute = k_nil_brute(g, p, b);
    r.ms_brute = ms_since(t0);
  }
  if (e != Engine::kBrute) {
    auto t0 = std::chrono::steady_clock::now();
    require_formula_supported(g);
    SignRule rule = selected_sign_rule(b);
    r.sign_rule = to_string(rule);
    long long reps = -1;
    r.formula = k_nil_formula_with_rule(g, p, rule, b, &r.breakdown, &reps);
    r.representatives = reps;
    r.ms_formula = ms_since(t0);
  }
  r.agree = r.brute && r.formula && *r.brute == *r.formula;
  return r;
}

}  // namespace parcount
