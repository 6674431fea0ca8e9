#include "parcount/types.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace parcount {

int SpectralData::weight() const {
  int w = 0;
  for (const auto& e : entries) w += e.d * e.m;
  return w;
}

std::vector<std::pair<int, int>> SpectralData::shape() const {
  std::vector<std::pair<int, int>> s;
  for (const auto& e : entries) s.emplace_back(e.d, e.m);
  return s;
}

bool operator==(const TypeEntry& a, const TypeEntry& b) {
  return a.d == b.d && a.m == b.m && a.lambda == b.lambda;
}

bool operator<(const TypeEntry& a, const TypeEntry& b) {
  if (a.d != b.d) return a.d < b.d;
  if (a.m != b.m) return a.m < b.m;
  return a.lambda < b.lambda;
}

TypeLabel::TypeLabel(std::vector<TypeEntry> e) : entries(std::move(e)) {
  std::sort(entries.begin(), entries.end());
  for (const auto& t : entries)
    PARCOUNT_CHECK(t.lambda.weight() == t.m, "type entry partition must have weight m");
}

int TypeLabel::weight() const {
  int w = 0;
  for (const auto& e : entries) w += e.d * e.m;
  return w;
}

std::vector<std::pair<int, int>> TypeLabel::shape() const {
  std::vector<std::pair<int, int>> s;
  for (const auto& e : entries) s.emplace_back(e.d, e.m);
  return s;
}

std::string TypeLabel::key() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < entries.size(); ++i) {
    os << (i ? ";" : "") << "(" << entries[i].d << "," << entries[i].m << "):"
       << entries[i].lambda.to_string();
  }
  os << "}";
  return os.str();
}

namespace {

// Backtracking over cycles (descending), assigning each to a shape entry.
// Emits every complete assignment.
void assign_cycles(const std::vector<std::pair<int, int>>& shape, const std::vector<int>& cycles,
                   size_t i, std::vector<int>& used, std::vector<int>& choice,
                   const std::function<bool(const std::vector<int>&)>& emit, bool& stop) {
  if (stop) return;
  if (i == cycles.size()) {
    for (size_t j = 0; j < shape.size(); ++j)
      if (used[j] != shape[j].second) return;
    if (emit(choice)) stop = true;
    return;
  }
  for (size_t j = 0; j < shape.size(); ++j) {
    int d = shape[j].first;
    if (cycles[i] % d != 0) continue;
    int add = cycles[i] / d;
    if (used[j] + add > shape[j].second) continue;
    used[j] += add;
    choice[i] = static_cast<int>(j);
    assign_cycles(shape, cycles, i + 1, used, choice, emit, stop);
    used[j] -= add;
    if (stop) return;
  }
}

}  // namespace

std::optional<TorusAssignment> delta_membership(const std::vector<std::pair<int, int>>& shape,
                                                const Partition& rho) {
  int total = 0;
  for (auto [d, m] : shape) total += d * m;
  PARCOUNT_CHECK(total == rho.weight(), "delta weight mismatch");
  std::optional<TorusAssignment> found;
  std::vector<int> used(shape.size(), 0), choice(rho.parts.size(), 0);
  bool stop = false;
  assign_cycles(shape, rho.parts, 0, used, choice,
                [&](const std::vector<int>& c) {
                  found = TorusAssignment{c};
                  return true;  // first witness in canonical order
                },
                stop);
  return found;
}

std::vector<std::vector<Partition>> assignment_profiles(const std::vector<std::pair<int, int>>& shape,
                                                        const Partition& rho) {
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<int> used(shape.size(), 0), choice(rho.parts.size(), 0);
  bool stop = false;
  assign_cycles(shape, rho.parts, 0, used, choice,
                [&](const std::vector<int>& c) {
                  std::vector<std::vector<int>> profile(shape.size());
                  for (size_t i = 0; i < c.size(); ++i)
                    profile[c[i]].push_back(rho.parts[i] / shape[c[i]].first);
                  for (auto& p : profile) std::sort(p.rbegin(), p.rend());
                  seen.insert(std::move(profile));
                  return false;  // keep enumerating
                },
                stop);
  std::vector<std::vector<Partition>> out;
  for (const auto& prof : seen) {
    std::vector<Partition> p;
    for (const auto& parts : prof) p.emplace_back(parts);
    out.push_back(std::move(p));
  }
  return out;
}

long long profile_index(const Partition& rho, const std::vector<Partition>& profile) {
  long long denom = 1;
  for (const auto& p : profile) denom *= z_order(p);
  long long num = z_order(rho);
  PARCOUNT_CHECK(num % denom == 0, "Weyl index is not integral");
  return num / denom;
}

long long weyl_index(const std::vector<std::pair<int, int>>& shape, const Partition& rho,
                     const TorusAssignment& a) {
  std::vector<std::vector<int>> raw(shape.size());
  PARCOUNT_CHECK(a.entry_of_cycle.size() == rho.parts.size(), "assignment length mismatch");
  for (size_t i = 0; i < rho.parts.size(); ++i) {
    int j = a.entry_of_cycle[i];
    PARCOUNT_CHECK(rho.parts[i] % shape[j].first == 0, "assignment violates divisibility");
    raw[j].push_back(rho.parts[i] / shape[j].first);
  }
  std::vector<Partition> profile;
  for (auto& parts : raw) profile.emplace_back(parts);
  for (size_t j = 0; j < shape.size(); ++j)
    PARCOUNT_CHECK(profile[j].weight() == shape[j].second, "assignment multiplicities do not match");
  long long index = profile_index(rho, profile);
  // The paper leaves multi-class embeddings unspecified; if another profile
  // would change the index, fail loudly rather than guess.
  for (const auto& other : assignment_profiles(shape, rho)) {
    if (profile_index(rho, other) != index)
      throw InvariantError("distinct assignment classes give different Weyl indices for rho=" +
                           rho.to_string());
  }
  return index;
}

std::pair<int, int> relative_ranks(const GroupSpec& g, const std::vector<int>& comp) {
  if (g.kind != GroupKind::GL) throw ConfigError("relative ranks implemented for the split GL case");
  int total = 0;
  for (int x : comp) total += x;
  PARCOUNT_CHECK(total == g.n, "composition does not sum to n");
  return {g.n, g.n};
}

namespace {

// Multisets {(d_j, m_j)} with sum d_j m_j = n, canonical order.
void shapes_rec(int rest, std::pair<int, int> min_pair, std::vector<std::pair<int, int>>& cur,
                std::vector<std::vector<std::pair<int, int>>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int d = min_pair.first; d <= rest; ++d) {
    int m_start = d == min_pair.first ? min_pair.second : 1;
    for (int m = m_start; d * m <= rest; ++m) {
      cur.emplace_back(d, m);
      shapes_rec(rest - d * m, {d, m}, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<TypeLabel> enumerate_types(int n) {
  std::vector<std::vector<std::pair<int, int>>> shapes;
  std::vector<std::pair<int, int>> cur;
  shapes_rec(n, {1, 1}, cur, shapes);
  std::vector<TypeLabel> out;
  for (const auto& shape : shapes) {
    // cartesian product of partition choices per entry
    std::vector<std::vector<Partition>> choices;
    for (auto [d, m] : shape) choices.push_back(partitions_of(m));
    std::vector<size_t> idx(shape.size(), 0);
    while (true) {
      std::vector<TypeEntry> entries;
      for (size_t j = 0; j < shape.size(); ++j)
        entries.push_back({shape[j].first, shape[j].second, choices[j][idx[j]]});
      TypeLabel label(std::move(entries));
      if (std::find(out.begin(), out.end(), label) == out.end()) out.push_back(label);
      int i = static_cast<int>(idx.size()) - 1;
      while (i >= 0 && ++idx[i] == choices[i].size()) idx[i--] = 0;
      if (i < 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool type_in_levi_set(const TypeLabel& t, const std::vector<int>& comp) {
  for (const auto& [rho, count] : levi_cycle_types(comp))
    if (delta_membership(t.shape(), rho).has_value()) return true;
  return false;
}

std::vector<TypeLabel> enumerate_types_for_levi(int n, const std::vector<int>& comp) {
  std::vector<TypeLabel> out;
  for (const auto& t : enumerate_types(n))
    if (type_in_levi_set(t, comp)) out.push_back(t);
  return out;
}

bool shape_realizable(const std::vector<std::pair<int, int>>& shape, long long q, bool group_case) {
  std::map<int, int> needed;
  for (auto [d, m] : shape) ++needed[d];
  for (auto [d, cnt] : needed) {
    long long avail = count_monic_irreducibles(q, d);
    if (group_case && d == 1) avail -= 1;  // exclude the factor x
    if (cnt > avail) return false;
  }
  return true;
}

}  // namespace parcount
