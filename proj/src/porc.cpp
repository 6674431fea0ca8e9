#include "parcount/porc.hpp"

#include <algorithm>
#include <map>

namespace parcount {

QPoly lagrange_interpolate(const std::vector<SweepPoint>& pts) {
  QPoly sum;
  for (size_t i = 0; i < pts.size(); ++i) {
    QPoly term = QPoly::constant(Rat(pts[i].value));
    Rat denom(1);
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      term = term * (QPoly::variable() - QPoly::constant(Rat(pts[j].q)));
      denom *= Rat(pts[i].q) - Rat(pts[j].q);
    }
    sum = sum + term.scaled(Rat(1) / denom);
  }
  for (const auto& pt : pts)
    PARCOUNT_CHECK(sum.eval(Rat(pt.q)) == Rat(pt.value), "interpolation failed to reproduce a point");
  return sum;
}

PorcFit porc_fit(const SweepSeries& series, long long modulus, int degree_bound) {
  PorcFit fit;
  fit.modulus = modulus;
  PARCOUNT_CHECK(modulus >= 1, "modulus must be positive");
  if (series.points.size() < 2) throw ConfigError("sweep needs at least two points");
  auto points = series.points;
  std::sort(points.begin(), points.end(), [](const SweepPoint& a, const SweepPoint& b) { return a.q < b.q; });
  for (size_t i = 1; i < points.size(); ++i)
    if (points[i].q == points[i - 1].q) throw ConfigError("duplicate q in sweep");

  SweepPoint held = points.back();
  points.pop_back();
  fit.held_out_q = held.q;
  fit.held_out_expected = held.value;

  std::map<long long, std::vector<SweepPoint>> by_class;
  for (const auto& pt : points) by_class[pt.q % modulus].push_back(pt);

  bool all_ok = true;
  for (long long r = 0; r < modulus; ++r) {
    ClassFit cf;
    cf.residue = r;
    auto it = by_class.find(r);
    if (it == by_class.end() || it->second.empty()) {
      cf.note = "insufficient data";
      fit.classes.push_back(std::move(cf));
      continue;
    }
    QPoly poly = lagrange_interpolate(it->second);
    if (poly.degree() > degree_bound) {
      cf.note = "not polynomial within the degree bound on this class";
      all_ok = false;
    } else {
      cf.poly = poly;
      for (const auto& pt : it->second) cf.verified_at.push_back(pt.q);
    }
    fit.classes.push_back(std::move(cf));
  }

  // Held-out prediction from its residue class.
  const ClassFit& held_class = fit.classes[static_cast<size_t>(held.q % modulus)];
  if (held_class.poly) {
    Rat predicted = held_class.poly->eval(Rat(held.q));
    if (denominator(predicted) == 1) fit.held_out_predicted = static_cast<long long>(numerator(predicted));
    if (!fit.held_out_predicted || *fit.held_out_predicted != held.value) all_ok = false;
  } else {
    all_ok = false;
  }
  fit.consistent = all_ok;
  return fit;
}

PorcFit porc_fit_auto(const SweepSeries& series, const std::vector<long long>& moduli, int degree_bound) {
  PorcFit last;
  for (long long m : moduli) {
    last = porc_fit(series, m, degree_bound);
    if (last.consistent) return last;
  }
  return last;
}

bool refinement_stable(const SweepSeries& series, const PorcFit& coarse, long long finer_modulus,
                       int degree_bound) {
  PARCOUNT_CHECK(finer_modulus % coarse.modulus == 0, "finer modulus must be a multiple");
  PorcFit fine = porc_fit(series, finer_modulus, degree_bound);
  for (const ClassFit& fc : fine.classes) {
    if (!fc.poly) continue;
    const ClassFit& cc = coarse.classes[static_cast<size_t>(fc.residue % coarse.modulus)];
    if (!cc.poly) continue;
    // Comparable only when the finer class has enough points to pin the
    // coarse polynomial's degree.
    if (static_cast<int>(fc.verified_at.size()) < cc.poly->degree() + 1) continue;
    if (*fc.poly != *cc.poly) return false;
  }
  return true;
}

std::vector<FiberSeries> additive_fiber_probe(GroupKind kind, int n, const std::vector<long long>& qs,
                                              int degree_bound, const Budget& b) {
  std::map<TypeLabel, std::vector<SweepPoint>> per_type;
  for (long long q : qs) {
    int p = 0, k = 0;
    for (int cand = 2; cand <= q; ++cand) {
      if (!is_prime(cand)) continue;
      long long v = cand;
      int e = 1;
      while (v < q) {
        v *= cand;
        ++e;
      }
      if (v == q) {
        p = cand;
        k = e;
        break;
      }
    }
    if (p == 0) throw ConfigError("q=" + std::to_string(q) + " is not a prime power");
    GroupSpec g(kind, n, FieldSpec::get(p, k));
    for (const TypeFiber& fiber : type_partition_lie(g, b))
      per_type[fiber.type].push_back({q, fiber.count});
  }
  // A type absent at some q has fiber size zero there; the zero is real
  // data (these polynomials can vanish at small q).
  for (auto& [type, pts] : per_type) {
    for (long long q : qs)
      if (std::find_if(pts.begin(), pts.end(), [&](const SweepPoint& s) { return s.q == q; }) == pts.end())
        pts.push_back({q, 0});
    std::sort(pts.begin(), pts.end(), [](const SweepPoint& a, const SweepPoint& b) { return a.q < b.q; });
  }
  std::vector<FiberSeries> out;
  for (auto& [type, pts] : per_type) {
    FiberSeries fs;
    fs.type = type;
    fs.series.quantity = "additive-fiber";
    fs.series.label = to_string(kind) + std::to_string(n) + " " + type.key();
    fs.series.points = pts;
    fs.fit = porc_fit_auto(fs.series, {1, 2, 6}, degree_bound);
    out.push_back(std::move(fs));
  }
  return out;
}

}  // namespace parcount
