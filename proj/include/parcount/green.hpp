#pragma once

#include <vector>

#include "parcount/partitions.hpp"
#include "parcount/qpoly.hpp"
#include "parcount/types.hpp"

namespace parcount {

// Green polynomials of GL_n: Q[lambda][rho](q) is the value of the
// Deligne-Lusztig virtual character R_{T_w}^{GL_n}(1), w of cycle type rho,
// at a unipotent element of Jordan type lambda.
//
// Built from the Hall-Littlewood transition X via Q(q) = q^{n(lambda)} *
// X(1/q). The indexing/normalization convention is pinned operationally by
// two identities checked at construction time (failure is a hard error):
//   (1/n!) sum_{w in S_n} Q[lambda][rho(w)] = 1 for every lambda, and
//   Q[(1^n)][rho] = (-1)^{n-l(rho)} |GL_n|_{p'} / |T_rho| symbolically.
struct GreenTable {
  int n = 0;
  std::vector<Partition> parts;            // canonical index order
  std::vector<std::vector<QPoly>> table;   // [lambda][rho]

  const QPoly& at(const Partition& lambda, const Partition& rho) const;
  // CSV: header = torus cycle types, one row per unipotent type; entries in
  // the canonical polynomial grammar (integer coefficients, caret powers,
  // no spaces).
  std::string to_csv() const;
};

const GreenTable& green_table(int n, int bound = 6);

// Q[(1^n)][rho], asserted against the closed form above.
QPoly steinberg_value(const Partition& rho, int n);

// Value of R_{T_w}^{GL_n}(1), w of cycle type rho over the full group, at
// an element of the given type; exact integer. Sums over all assignment
// profiles: each contributes z(rho)/prod z(rho^(j)) times the product of
// factor Green polynomials evaluated at q^{d_j}.
Rat dl_value(const TypeLabel& type, const Partition& rho, long long q);

// Sign (-1)^{n - l(rho)} = epsilon_G * epsilon_{T_w} for split GL_n.
int torus_sign(const Partition& rho, int n);

}  // namespace parcount
