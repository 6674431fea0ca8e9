#pragma once

#include <map>
#include <vector>

#include "parcount/partitions.hpp"
#include "parcount/ratfunc.hpp"

namespace parcount {

// Symmetric function of homogeneous degree n in the monomial basis:
// coordinates indexed by partitions of n.
using MonomialVec = std::map<Partition, Rat>;

// p_rho expanded in the monomial basis (integer coordinates).
MonomialVec power_sum_in_monomials(const Partition& rho);

// Transition data between power sums, monomials and Hall-Littlewood P
// functions for degree n, built once per n.
//
// The Hall-Littlewood basis is produced by Gram-Schmidt over Q(t) against
// the t-deformed Hall pairing <p_rho, p_rho> = z_rho / prod(1 - t^{rho_i}),
// processing partitions in increasing dominance order; the result is the
// unique basis that is unitriangular over the monomial basis and pairwise
// orthogonal. Specializations: t=0 gives Schur, t=1 gives monomial.
class HallLittlewood {
 public:
  explicit HallLittlewood(int n);

  int n() const { return n_; }
  // Canonical index order: partitions_of(n), descending lexicographic.
  const std::vector<Partition>& index() const { return parts_; }
  int position(const Partition& p) const;

  // P_lambda in the monomial basis.
  const std::vector<std::vector<RatFunc>>& p_basis_in_monomials() const { return P_in_m_; }

  // Transition X[lambda][rho] with p_rho = sum_lambda X[lambda][rho] P_lambda;
  // entries are polynomials with integer coefficients.
  const std::vector<std::vector<QPoly>>& transition() const { return X_; }

 private:
  int n_;
  std::vector<Partition> parts_;
  std::vector<std::vector<RatFunc>> P_in_m_;
  std::vector<std::vector<QPoly>> X_;
};

// The power-sum -> Hall-Littlewood transition matrix for degree n; rows and
// columns indexed by partitions_of(n). Cached; bound defaults to 6.
const HallLittlewood& hall_littlewood_transition(int n, int bound = 6);

}  // namespace parcount
