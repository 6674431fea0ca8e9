#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parcount/group.hpp"
#include "parcount/partitions.hpp"
#include "parcount/poly.hpp"

namespace parcount {

// Spectral data of a semisimple element: distinct irreducible factors of
// its characteristic polynomial with eigenvalue multiplicities. The
// centralizer of the element is prod_j GL_{m_j}(F_{q^{d_j}}).
struct SpectralEntry {
  int d = 0;  // factor degree
  int m = 0;  // multiplicity
  Poly factor;
};

struct SpectralData {
  std::vector<SpectralEntry> entries;  // sorted by (d, m, factor)
  int weight() const;
  std::vector<std::pair<int, int>> shape() const;  // (d, m) list
};

// A point of the type set: centralizer shape plus one partition of m per
// factor classifying the unipotent (or nilpotent) part inside the factor.
struct TypeEntry {
  int d = 0;
  int m = 0;
  Partition lambda;  // |lambda| = m

  friend bool operator==(const TypeEntry& a, const TypeEntry& b);
  friend bool operator<(const TypeEntry& a, const TypeEntry& b);
};

struct TypeLabel {
  std::vector<TypeEntry> entries;  // sorted

  explicit TypeLabel(std::vector<TypeEntry> e = {});
  int weight() const;
  std::vector<std::pair<int, int>> shape() const;
  // Stable report key "{(d,m):[lambda];...}".
  std::string key() const;
  friend bool operator==(const TypeLabel& a, const TypeLabel& b) { return a.entries == b.entries; }
  friend bool operator<(const TypeLabel& a, const TypeLabel& b) { return a.entries < b.entries; }
};

// Witness that the semisimple data embeds into the twisted torus T_rho:
// cycle i of length rho_i is hosted by entry j if d_j | rho_i, contributing
// rho_i / d_j to that entry's multiplicity; all multiplicities must match.
struct TorusAssignment {
  std::vector<int> entry_of_cycle;  // index into the shape, one per part of rho
};

std::optional<TorusAssignment> delta_membership(const std::vector<std::pair<int, int>>& shape,
                                                const Partition& rho);

// All distinct assignment profiles: per shape entry, the partition
// {rho_i / d_j : cycle i assigned to j}. Empty iff delta is 0.
std::vector<std::vector<Partition>> assignment_profiles(const std::vector<std::pair<int, int>>& shape,
                                                        const Partition& rho);

// |W_G(T_w)^F / W_xi(T_w)^F| for the canonical assignment:
// z(rho) / prod_j z(rho^{(j)}), asserted integral. Errors if distinct
// assignment profiles would give different indices.
long long weyl_index(const std::vector<std::pair<int, int>>& shape, const Partition& rho,
                     const TorusAssignment& a);

long long profile_index(const Partition& rho, const std::vector<Partition>& profile);

// F-relative ranks (epsilon_G, epsilon_L) for a split GL_n Levi.
std::pair<int, int> relative_ranks(const GroupSpec& g, const std::vector<int>& comp);

// All abstract types of weight n: shapes {(d_j, m_j)} with sum d_j m_j = n,
// each paired with every tuple of partitions lambda_j of m_j.
std::vector<TypeLabel> enumerate_types(int n);
// Only the types embeddable in some T_w, w in W_L.
std::vector<TypeLabel> enumerate_types_for_levi(int n, const std::vector<int>& comp);
bool type_in_levi_set(const TypeLabel& t, const std::vector<int>& comp);

// Realizability at a given q: enough distinct irreducibles of each degree
// must exist; the group case excludes the factor x.
bool shape_realizable(const std::vector<std::pair<int, int>>& shape, long long q, bool group_case);

}  // namespace parcount
