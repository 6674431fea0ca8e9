#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parcount/counting.hpp"
#include "parcount/qpoly.hpp"

namespace parcount {

struct SweepPoint {
  long long q = 0;
  long long value = 0;
};

struct SweepSeries {
  std::string quantity;           // free-form tag, e.g. "k-group"
  std::string label;              // group/parabolic description
  std::vector<SweepPoint> points; // distinct prime powers, ascending
};

struct ClassFit {
  long long residue = 0;
  std::optional<QPoly> poly;      // absent: insufficient data / over bound
  std::string note;               // "insufficient data", "degree over bound"
  std::vector<long long> verified_at;
};

struct PorcFit {
  long long modulus = 1;
  bool consistent = false;        // all classes fit and held-out predicted
  long long held_out_q = 0;
  long long held_out_expected = 0;
  std::optional<long long> held_out_predicted;
  std::vector<ClassFit> classes;
};

// Exact Lagrange interpolation of the in-class training points (held-out
// policy: the largest q is excluded from fitting and predicted). The fit is
// PORC-consistent iff every nonempty class fits within the degree bound and
// the held-out point is reproduced exactly.
PorcFit porc_fit(const SweepSeries& series, long long modulus, int degree_bound);

// Smallest modulus among the candidates whose fit is consistent; falls back
// to the last candidate's (inconsistent) fit if none works.
PorcFit porc_fit_auto(const SweepSeries& series, const std::vector<long long>& moduli, int degree_bound);

// Refinement stability: fits for a multiple of the modulus must agree with
// the coarse fit wherever the finer classes have enough data to pin them.
bool refinement_stable(const SweepSeries& series, const PorcFit& coarse, long long finer_modulus,
                       int degree_bound);

// Minimal-degree exact interpolation through all points.
QPoly lagrange_interpolate(const std::vector<SweepPoint>& pts);

struct FiberSeries {
  TypeLabel type{{}};
  SweepSeries series;
  PorcFit fit;
};

// Empirical probe of the additive fiber-size question: sweeps q, fits each
// additive fiber size per type label. Evidence at desk scale, not a proof.
std::vector<FiberSeries> additive_fiber_probe(GroupKind kind, int n, const std::vector<long long>& qs,
                                              int degree_bound, const Budget& b = {});

}  // namespace parcount
