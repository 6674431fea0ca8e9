#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "parcount/matrix.hpp"

namespace parcount {

enum class GroupKind { GL, SL };

std::string to_string(GroupKind k);

struct GroupSpec {
  GroupKind kind = GroupKind::GL;
  int n = 1;
  std::shared_ptr<const FieldSpec> field;

  GroupSpec() = default;
  GroupSpec(GroupKind k, int rank, std::shared_ptr<const FieldSpec> f);

  long long q() const { return field->q(); }
  const FieldSpec* F() const { return field.get(); }
  long long order() const;      // |G^F|
  long long lie_size() const;   // |g^F| = q^{dim g}
  long long order_p_part() const;
  long long order_p_prime_part() const;
  std::string to_string() const;  // e.g. "GL2(2^1/0,1)" shortened to "GL2(q=2)"
};

// Parabolic data: composition (n_1,...,n_k) of n defining block upper
// triangular P, block diagonal L, strict upper U, and the Lie algebra
// versions by the same pattern.
struct ParabolicSpec {
  std::vector<int> comp;

  explicit ParabolicSpec(std::vector<int> c);
  int n() const;
  int blocks() const { return static_cast<int>(comp.size()); }
  // Block index of row/column i.
  int block_of(int i) const;
  int dim_u() const;  // number of strictly-upper block positions
  int dim_p() const;
  long long parabolic_order(const GroupSpec& g) const;
  long long levi_order(const GroupSpec& g) const;
  long long unipotent_order(const GroupSpec& g) const;
  std::string to_string() const;  // "2,1"
};

struct Budget {
  long long max_elements = 10'000'000;
  static Budget from_env();  // PARCOUNT_BUDGET override
  void require(long long size, const std::string& what) const;
};

long long gl_order(long long q, int n);

// Enumerations. Deterministic order: row-major lexicographic on entries in
// the field's canonical element order. Materialized; the budget is checked
// against the exact set size before any work.
std::vector<Mat> enumerate_group(const GroupSpec& g, const Budget& b = {});
std::vector<Mat> enumerate_parabolic(const GroupSpec& g, const ParabolicSpec& p, const Budget& b = {});
std::vector<Mat> enumerate_levi(const GroupSpec& g, const ParabolicSpec& p, const Budget& b = {});
std::vector<Mat> enumerate_unipotent_radical(const GroupSpec& g, const ParabolicSpec& p, const Budget& b = {});
std::vector<Mat> enumerate_lie_algebra(const GroupSpec& g, const Budget& b = {});
std::vector<Mat> enumerate_lie_parabolic(const GroupSpec& g, const ParabolicSpec& p, const Budget& b = {});
std::vector<Mat> enumerate_lie_levi(const GroupSpec& g, const ParabolicSpec& p, const Budget& b = {});
std::vector<Mat> enumerate_nilradical(const GroupSpec& g, const ParabolicSpec& p, const Budget& b = {});

// Membership predicates for the block patterns.
bool in_parabolic_pattern(const Mat& m, const ParabolicSpec& p);
bool in_levi_pattern(const Mat& m, const ParabolicSpec& p);
bool in_nilradical_pattern(const Mat& m, const ParabolicSpec& p);
bool in_unipotent_radical(const Mat& m, const ParabolicSpec& p);

// Block-diagonal projection p -> l (projection along u).
Mat levi_projection(const Mat& m, const ParabolicSpec& p);

// |C_{G^F}(x)| for x a group element or Lie algebra element.
long long centralizer_order(const GroupSpec& g, const Mat& x, const Budget& b = {});

// Number of H-orbits on S under the action; the Burnside division must be
// exact, otherwise InvariantError (an action bug).
long long burnside_count(const std::vector<Mat>& acting, const std::vector<Mat>& acted,
                         const std::function<Mat(const Mat&, const Mat&)>& action);
// Conjugation/adjoint specialization.
long long burnside_conjugation(const std::vector<Mat>& acting, const std::vector<Mat>& acted);

// Cached transversal of G^F / P^F (coset representatives).
std::shared_ptr<const std::vector<Mat>> coset_transversal(const GroupSpec& g, const ParabolicSpec& p,
                                                          const Budget& b = {});

// f-functions: number of conjugates of P^F (resp. p^F, n^F) containing the
// element, computed over the cached transversal.
long long f_parabolic_group(const GroupSpec& g, const ParabolicSpec& p, const Mat& x, const Budget& b = {});
long long f_parabolic_lie(const GroupSpec& g, const ParabolicSpec& p, const Mat& x, const Budget& b = {});
long long f_nilradical_lie(const GroupSpec& g, const ParabolicSpec& p, const Mat& x, const Budget& b = {});

struct OrbitInfo {
  Mat rep;              // least element of the orbit in enumeration order
  long long size = 0;
  long long centralizer = 0;
};

// Partition of an enumerated set into conjugation orbits of G^F, reps
// deterministic. `universe_is_lie` selects the dense index space.
std::vector<OrbitInfo> orbit_partition(const GroupSpec& g, const std::vector<Mat>& set,
                                       const Budget& b = {});

// One representative per orbit meeting `filter` (all orbits if empty).
std::vector<Mat> orbit_representatives(const GroupSpec& g, const std::vector<Mat>& set,
                                       const std::vector<Mat>& filter, const Budget& b = {});

}  // namespace parcount
