#include "parcount/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace parcount {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  std::sort(parts.rbegin(), parts.rend());
  for (int x : parts) PARCOUNT_CHECK(x >= 1, "partition parts must be >= 1");
}

int Partition::weight() const {
  int w = 0;
  for (int x : parts) w += x;
  return w;
}

int Partition::n_stat() const {
  int s = 0;
  for (size_t i = 0; i < parts.size(); ++i) s += static_cast<int>(i) * parts[i];
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int i = 1; i <= (parts.empty() ? 0 : parts[0]); ++i) {
    int cnt = 0;
    for (int x : parts)
      if (x >= i) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

int Partition::multiplicity(int v) const {
  int c = 0;
  for (int x : parts)
    if (x == v) ++c;
  return c;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << "]";
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int next = std::min(rest, maxpart); next >= 1; --next) {
      cur.push_back(next);
      rec(rest - next, next);
      cur.pop_back();
    }
  };
  rec(n, n);
  // generated in descending lexicographic order already: (n), (n-1,1), ...
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long z_order(const Partition& rho) {
  std::map<int, int> mult;
  for (int x : rho.parts) ++mult[x];
  long long z = 1;
  for (auto [m, a] : mult) {
    for (int i = 0; i < a; ++i) z *= m;
    z *= factorial(a);
  }
  return z;
}

long long torus_order(const Partition& rho, long long q) {
  long long t = 1;
  for (int x : rho.parts) t *= (ipow(q, x) - 1);
  return t;
}

QPoly torus_order_poly(const Partition& rho) {
  QPoly t = QPoly::constant(Rat(1));
  for (int x : rho.parts) t = t * (QPoly::monomial(Rat(1), x) - QPoly::constant(Rat(1)));
  return t;
}

long long torus_lie_size(const Partition& rho, long long q) { return ipow(q, rho.weight()); }

bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  size_t len = std::max(a.parts.size(), b.parts.size());
  for (size_t i = 0; i < len; ++i) {
    sa += i < a.parts.size() ? a.parts[i] : 0;
    sb += i < b.parts.size() ? b.parts[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::vector<std::pair<Partition, long long>> levi_cycle_types(const std::vector<int>& comp) {
  std::map<std::vector<int>, long long> acc;
  std::vector<std::pair<std::vector<int>, long long>> cur{{{}, 1}};
  for (int m : comp) {
    std::vector<std::pair<std::vector<int>, long long>> next;
    for (const auto& [merged, count] : cur) {
      for (const Partition& rho : partitions_of(m)) {
        std::vector<int> nm = merged;
        nm.insert(nm.end(), rho.parts.begin(), rho.parts.end());
        next.emplace_back(std::move(nm), count * (factorial(m) / z_order(rho)));
      }
    }
    cur = std::move(next);
  }
  for (auto& [merged, count] : cur) {
    std::sort(merged.rbegin(), merged.rend());
    acc[merged] += count;
  }
  std::vector<std::pair<Partition, long long>> out;
  for (auto& [parts, count] : acc) out.emplace_back(Partition(parts), count);
  return out;
}

long long levi_weyl_order(const std::vector<int>& comp) {
  long long w = 1;
  for (int m : comp) w *= factorial(m);
  return w;
}

}  // namespace parcount
