#pragma once

#include "parcount/jordan.hpp"
#include "parcount/types.hpp"

namespace parcount {

// Spectral data of a semisimple matrix: irreducible factors of its
// characteristic polynomial with eigenvalue multiplicities. In the group
// case the factor x is forbidden (the element is invertible).
SpectralData spectral_data(const Mat& semisimple, bool group_case);

// tau_G: Jordan-decompose, read the centralizer shape off the semisimple
// part, and classify the unipotent part factor by factor as a partition
// over the extension field F_{q^{d_j}}.
TypeLabel type_of_group_element(const Mat& g);

// tau_g, the additive analogue (nilpotent part per factor).
TypeLabel type_of_lie_element(const Mat& x);

}  // namespace parcount
