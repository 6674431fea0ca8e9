#pragma once

#include <string>
#include <vector>

#include "parcount/common.hpp"
#include "parcount/qpoly.hpp"

namespace parcount {

// Integer partition, parts weakly decreasing and >= 1.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  // n(lambda) = sum (i-1) * lambda_i
  int n_stat() const;
  Partition conjugate() const;
  // multiplicity of the part value v
  int multiplicity(int v) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

  std::string to_string() const;  // "[2,1]"
};

// All partitions of n, in descending lexicographic order starting at (n).
// This order refines dominance and is the canonical table index order.
std::vector<Partition> partitions_of(int n);

// Order of the S_n-centralizer of a permutation of this cycle type:
// prod_m m^{a_m} a_m!.
long long z_order(const Partition& rho);

// |T_w^F| = prod (q^{rho_i} - 1).
long long torus_order(const Partition& rho, long long q);
QPoly torus_order_poly(const Partition& rho);
// |t_w^F| = q^{|rho|}.
long long torus_lie_size(const Partition& rho, long long q);

// Dominance comparison (only meaningful for equal weight).
bool dominates(const Partition& a, const Partition& b);

// Cycle types of W_L = prod S_{n_i} as partitions of n with element counts;
// counts sum to |W_L| = prod n_i!.
std::vector<std::pair<Partition, long long>> levi_cycle_types(const std::vector<int>& comp);

long long levi_weyl_order(const std::vector<int>& comp);

long long factorial(int n);

}  // namespace parcount
