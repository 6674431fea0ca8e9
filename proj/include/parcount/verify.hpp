#pragma once

#include <functional>

#include "parcount/counting.hpp"
#include "parcount/cyclotomic.hpp"

namespace parcount {

// The Lie algebra of a twisted maximal torus T_w, w of cycle type rho, as
// the product of extension fields: t_w^F = prod_i F_{q^{rho_i}}. Elements
// are index tuples, one per block, flattened to a single index.
struct TorusAlgebra {
  Partition rho;
  std::shared_ptr<const FieldSpec> base;                  // F_q
  std::vector<std::shared_ptr<const FieldSpec>> blocks;   // F_{q^{rho_i}}

  TorusAlgebra(const Partition& r, std::shared_ptr<const FieldSpec> q_field);
  long long size() const;
  std::vector<int> element(long long index) const;
  long long index_of(const std::vector<int>& el) const;
  bool is_zero(const std::vector<int>& el) const;
  // mu(kappa(x,z)) with kappa the trace form: product over blocks of the
  // additive character at x_i * z_i (traces compose down to F_p).
  CycInt mu_kappa(const std::vector<int>& x, const std::vector<int>& z) const;
};

// Unnormalized forward transform (F f)(x) = sum_z mu(kappa(x,z)) f(z).
// Rejected for sl_n with p | n (degenerate trace form).
std::vector<CycInt> fourier_transform_torus(const TorusAlgebra& t, const std::vector<CycInt>& f);

void require_nondegenerate_kappa(const GroupSpec& g);

// Harish-Chandra induction of a function on l^F to g^F by the cached coset
// transversal; result indexed alongside enumerate_lie_algebra order.
std::vector<Rat> hc_induce(const GroupSpec& g, const ParabolicSpec& p,
                           const std::function<Rat(const Mat&)>& f_on_levi, const Budget& b = {});

struct IdentityReport {
  std::string name;
  bool pass = true;
  std::string witness;  // empty when passing
};

// Normalizers: N_{G^F}(P^F) = P^F, and likewise for p^F and n^F.
IdentityReport verify_normalizers(const GroupSpec& g, const ParabolicSpec& p, const Budget& b = {});

// Semisimple parts of parabolic elements conjugate into the Levi (group and
// additive forms), checked exhaustively.
IdentityReport verify_semisimple_into_levi_group(const GroupSpec& g, const ParabolicSpec& p,
                                                 const Budget& b = {});
IdentityReport verify_semisimple_into_levi_lie(const GroupSpec& g, const ParabolicSpec& p,
                                               const Budget& b = {});

// (1/|W_G|) sum_w R_{T_w}^G(1)(g) = 1 on every conjugacy class.
IdentityReport verify_trivial_decomposition_group(const GroupSpec& g, const Budget& b = {});

// Additive twin on a Levi l = prod gl_{n_i}: pointwise on l^F, with the
// split (w=1) block terms cross-checked by brute coset sums.
IdentityReport verify_trivial_decomposition_additive(const GroupSpec& g, const std::vector<int>& comp,
                                                     const Budget& b = {});

// f_{P^F}^{G^F} = (1/|W_L|) sum_w R(1)(.) on classes; additive analogue on
// adjoint orbits.
IdentityReport verify_f_identity_group(const GroupSpec& g, const ParabolicSpec& p, const Budget& b = {});
IdentityReport verify_f_identity_lie(const GroupSpec& g, const ParabolicSpec& p, const Budget& b = {});

// Regular-function decomposition on gl_n: the chi_l identity pointwise and
// the torus Fourier identities in exact cyclotomic arithmetic.
IdentityReport verify_regular_decomposition(const GroupSpec& g, const Budget& b = {});
IdentityReport verify_fourier_orthogonality(const GroupSpec& g, const Budget& b = {});

// Lemma-level count identities: k = sum of f over representatives.
IdentityReport verify_lemma_sums(const GroupSpec& g, const ParabolicSpec& p, const Budget& b = {});

// Harish-Chandra plumbing: R(1_l) = f_{p}, R(chi_l) = |l^F| f_{n}.
IdentityReport verify_hc_induction(const GroupSpec& g, const ParabolicSpec& p, const Budget& b = {});

// The full identity suite for one group over all given compositions.
std::vector<IdentityReport> verify_suite(const GroupSpec& g, const std::vector<std::vector<int>>& comps,
                                         const Budget& b = {});

}  // namespace parcount
