#include "parcount/classify.hpp"

#include <algorithm>

namespace parcount {

SpectralData spectral_data(const Mat& s, bool group_case) {
  SpectralData out;
  Poly chi = s.charpoly();
  for (const auto& [f, mult] : poly_factor(chi)) {
    if (group_case) PARCOUNT_CHECK(f != Poly::x(s.field()), "group element with eigenvalue zero");
    SpectralEntry e;
    e.d = f.degree();
    e.m = mult;
    e.factor = f;
    out.entries.push_back(std::move(e));
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const SpectralEntry& a, const SpectralEntry& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.m != b.m) return a.m < b.m;
    return a.factor < b.factor;
  });
  PARCOUNT_CHECK(out.weight() == s.n(), "spectral data weight mismatch");
  return out;
}

namespace {

// Jordan type of the nilpotent part on the factor subspace, read over the
// extension field: the F_q-type has every part repeated d times.
Partition factor_partition(const Mat& nilpotent_part, const Mat& s, const Poly& factor, int d, int m) {
  Mat proj = eval_poly_at(factor, s);
  auto basis = proj.kernel_basis();
  PARCOUNT_CHECK(static_cast<int>(basis.size()) == d * m, "factor kernel has unexpected dimension");
  Mat restricted = restrict_to_subspace(nilpotent_part, basis);
  std::vector<int> fq_type = restricted.nilpotent_jordan_type();
  std::vector<int> parts;
  // multiplicities over F_q are d times the extension-field multiplicities
  std::vector<int> distinct;
  for (int v : fq_type)
    if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
  for (int v : distinct) {
    int mult = static_cast<int>(std::count(fq_type.begin(), fq_type.end(), v));
    PARCOUNT_CHECK(mult % d == 0, "factor Jordan multiplicity not divisible by the degree");
    for (int i = 0; i < mult / d; ++i) parts.push_back(v);
  }
  Partition lambda(parts);
  PARCOUNT_CHECK(lambda.weight() == m, "factor partition weight mismatch");
  return lambda;
}

TypeLabel classify(const Mat& s, const Mat& nil, bool group_case) {
  SpectralData spec = spectral_data(s, group_case);
  std::vector<TypeEntry> entries;
  for (const auto& e : spec.entries) {
    TypeEntry t;
    t.d = e.d;
    t.m = e.m;
    t.lambda = factor_partition(nil, s, e.factor, e.d, e.m);
    entries.push_back(std::move(t));
  }
  return TypeLabel(std::move(entries));
}

}  // namespace

TypeLabel type_of_group_element(const Mat& g) {
  JordanPairMult jp = jordan_mult(g);
  Mat nil = jp.u - Mat::identity(g.field(), g.n());
  return classify(jp.s, nil, true);
}

TypeLabel type_of_lie_element(const Mat& x) {
  JordanPairAdd jp = jordan_add(x);
  return classify(jp.s, jp.n, false);
}

}  // namespace parcount
