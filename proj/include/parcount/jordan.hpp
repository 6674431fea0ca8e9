#pragma once

#include "parcount/matrix.hpp"

namespace parcount {

// Multiplicative Jordan decomposition g = s * u = u * s, both parts
// polynomials in g; s semisimple (p'-order), u unipotent (p-power order).
struct JordanPairMult {
  Mat s, u;
};

// Additive Jordan decomposition x = s + n, both parts polynomials in x.
struct JordanPairAdd {
  Mat s, n;
};

JordanPairMult jordan_mult(const Mat& g);
JordanPairAdd jordan_add(const Mat& x);

// Order of an invertible matrix in GL_n(F_q).
long long element_order(const Mat& g);

// True iff the minimal polynomial is squarefree (checked via the radical of
// the characteristic polynomial).
bool is_semisimple(const Mat& m);

}  // namespace parcount
