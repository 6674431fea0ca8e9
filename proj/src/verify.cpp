#include "parcount/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace parcount {

TorusAlgebra::TorusAlgebra(const Partition& r, std::shared_ptr<const FieldSpec> q_field)
    : rho(r), base(std::move(q_field)) {
  for (int part : rho.parts) blocks.push_back(FieldSpec::get(base->p(), base->k() * part));
}

long long TorusAlgebra::size() const {
  long long s = 1;
  for (const auto& blk : blocks) s *= blk->q();
  return s;
}

std::vector<int> TorusAlgebra::element(long long index) const {
  std::vector<int> el(blocks.size());
  for (size_t i = 0; i < blocks.size(); ++i) {
    el[i] = static_cast<int>(index % blocks[i]->q());
    index /= blocks[i]->q();
  }
  return el;
}

long long TorusAlgebra::index_of(const std::vector<int>& el) const {
  long long idx = 0;
  for (size_t i = blocks.size(); i-- > 0;) idx = idx * blocks[i]->q() + el[i];
  return idx;
}

bool TorusAlgebra::is_zero(const std::vector<int>& el) const {
  for (int v : el)
    if (v != 0) return false;
  return true;
}

CycInt TorusAlgebra::mu_kappa(const std::vector<int>& x, const std::vector<int>& z) const {
  int exponent = 0;
  const int p = base->p();
  for (size_t i = 0; i < blocks.size(); ++i)
    exponent = (exponent + blocks[i]->trace(blocks[i]->mul(x[i], z[i]))) % p;
  return CycInt::zeta_pow(p, exponent);
}

void require_nondegenerate_kappa(const GroupSpec& g) {
  if (g.kind == GroupKind::SL && g.n % g.F()->p() == 0)
    throw ConfigError("kappa degenerate: p | n");
}

std::vector<CycInt> fourier_transform_torus(const TorusAlgebra& t, const std::vector<CycInt>& f) {
  const long long N = t.size();
  PARCOUNT_CHECK(static_cast<long long>(f.size()) == N, "function table size mismatch");
  std::vector<CycInt> out(N, CycInt::zero(t.base->p()));
  std::vector<std::vector<int>> els(N);
  for (long long i = 0; i < N; ++i) els[i] = t.element(i);
  for (long long x = 0; x < N; ++x) {
    CycInt acc = CycInt::zero(t.base->p());
    for (long long z = 0; z < N; ++z) {
      if (f[z].is_zero()) continue;
      acc = acc + t.mu_kappa(els[x], els[z]) * f[z];
    }
    out[x] = acc;
  }
  return out;
}

std::vector<Rat> hc_induce(const GroupSpec& g, const ParabolicSpec& p,
                           const std::function<Rat(const Mat&)>& f_on_levi, const Budget& b) {
  auto reps = coset_transversal(g, p, b);
  std::vector<Mat> rep_invs;
  for (const Mat& r : *reps) rep_invs.push_back(*r.inverse());
  auto par = enumerate_parabolic(g, p, b);
  std::vector<std::pair<Mat, Mat>> par_invs;
  for (const Mat& pp : par) par_invs.emplace_back(pp, *pp.inverse());

  auto lie = enumerate_lie_algebra(g, b);
  std::vector<Rat> out;
  out.reserve(lie.size());
  const Rat order(static_cast<long long>(par.size()));
  for (const Mat& x : lie) {
    Rat acc(0);
    for (size_t i = 0; i < reps->size(); ++i) {
      Mat y = rep_invs[i] * x * (*reps)[i];
      if (!in_parabolic_pattern(y, p)) continue;
      for (const auto& [pp, ppi] : par_invs) acc += f_on_levi(levi_projection(ppi * y * pp, p));
    }
    out.push_back(acc / order);
  }
  return out;
}

namespace {

std::string cell_name(const GroupSpec& g, const ParabolicSpec& p, const std::string& what) {
  return what + " [" + g.to_string() + ", P=(" + p.to_string() + ")]";
}

IdentityReport pass_report(std::string name) { return {std::move(name), true, ""}; }

IdentityReport fail_report(std::string name, std::string witness) {
  return {std::move(name), false, std::move(witness)};
}

}  // namespace

IdentityReport verify_normalizers(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  std::string name = cell_name(g, p, "normalizers N(P)=N(p)=N(n)=P");
  auto group = enumerate_group(g, b);
  auto par = enumerate_parabolic(g, p, b);
  // Basis positions of p and n.
  std::vector<std::pair<int, int>> p_pos, n_pos;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      if (p.block_of(i) <= p.block_of(j)) p_pos.emplace_back(i, j);
      if (p.block_of(i) < p.block_of(j)) n_pos.emplace_back(i, j);
    }
  for (const Mat& h : group) {
    bool in_p = in_parabolic_pattern(h, p);
    Mat hi = *h.inverse();
    bool normalizes_group = true;
    for (const Mat& pp : par)
      if (!in_parabolic_pattern(h * pp * hi, p)) {
        normalizes_group = false;
        break;
      }
    auto normalizes_pattern = [&](const std::vector<std::pair<int, int>>& pos, bool nil) {
      for (auto [i, j] : pos) {
        Mat e = Mat::unit(g.F(), g.n, i, j);
        Mat im = h * e * hi;
        if (nil ? !in_nilradical_pattern(im, p) : !in_parabolic_pattern(im, p)) return false;
      }
      return true;
    };
    bool normalizes_lie = normalizes_pattern(p_pos, false);
    bool normalizes_nil = normalizes_pattern(n_pos, true);
    if (normalizes_group != in_p || normalizes_lie != in_p || normalizes_nil != in_p)
      return fail_report(name, "g=" + h.to_string());
  }
  return pass_report(name);
}

IdentityReport verify_semisimple_into_levi_group(const GroupSpec& g, const ParabolicSpec& p,
                                                 const Budget& b) {
  std::string name = cell_name(g, p, "semisimple parts of P^F conjugate into L^F");
  auto par = enumerate_parabolic(g, p, b);
  std::vector<std::pair<Mat, Mat>> par_invs;
  for (const Mat& pp : par) par_invs.emplace_back(pp, *pp.inverse());
  for (const Mat& x : par) {
    Mat s = jordan_mult(x).s;
    bool ok = false;
    for (const auto& [pp, ppi] : par_invs)
      if (in_levi_pattern(pp * s * ppi, p)) {
        ok = true;
        break;
      }
    if (!ok) return fail_report(name, "g=" + x.to_string());
  }
  return pass_report(name);
}

IdentityReport verify_semisimple_into_levi_lie(const GroupSpec& g, const ParabolicSpec& p,
                                               const Budget& b) {
  std::string name = cell_name(g, p, "semisimple parts of p^F conjugate into l^F");
  auto par_alg = enumerate_lie_parabolic(g, p, b);
  auto par = enumerate_parabolic(g, p, b);
  std::vector<std::pair<Mat, Mat>> par_invs;
  for (const Mat& pp : par) par_invs.emplace_back(pp, *pp.inverse());
  for (const Mat& x : par_alg) {
    Mat s = jordan_add(x).s;
    bool ok = false;
    for (const auto& [pp, ppi] : par_invs)
      if (in_levi_pattern(pp * s * ppi, p)) {
        ok = true;
        break;
      }
    if (!ok) return fail_report(name, "x=" + x.to_string());
  }
  return pass_report(name);
}

IdentityReport verify_trivial_decomposition_group(const GroupSpec& g, const Budget& b) {
  std::string name = "trivial character decomposition on " + g.to_string();
  require_nondegenerate_kappa(g);
  const long long q = g.q();
  const long long wg = factorial(g.n);
  for (const ClassDatum& c : group_orbits(g, b).classes) {
    Rat sum(0);
    for (const Partition& rho : partitions_of(g.n))
      sum += Rat(wg / z_order(rho)) * dl_value(c.type, rho, q);
    if (sum != Rat(wg)) return fail_report(name, "class rep " + c.rep.to_string());
  }
  return pass_report(name);
}

IdentityReport verify_trivial_decomposition_additive(const GroupSpec& g, const std::vector<int>& comp,
                                                     const Budget& b) {
  ParabolicSpec p(comp);
  std::string name = cell_name(g, p, "additive trivial decomposition on l^F");
  require_nondegenerate_kappa(g);
  const long long q = g.q();
  // Per block: tabulate sum_{w in S_m} R_{t_w}(1)(x) for every x in gl_m,
  // using brute coset sums for the split torus and the character formula
  // for the twisted ones.
  std::vector<std::vector<Rat>> block_sums;
  std::vector<long long> block_sizes;
  for (int m : comp) {
    GroupSpec blk(GroupKind::GL, m, g.field);
    ParabolicSpec borel(std::vector<int>(m, 1));
    auto lie = enumerate_lie_algebra(blk, b);
    std::vector<Rat> sums;
    for (const Mat& x : lie) {
      TypeLabel type = type_of_lie_element(x);
      Partition split(std::vector<int>(m, 1));
      Rat w1_brute(f_parabolic_lie(blk, borel, x, b));
      Rat w1_formula = dl_value(type, split, q);
      if (w1_brute != w1_formula)
        return fail_report(name, "split-torus coset sum mismatch at x=" + x.to_string());
      Rat sum(0);
      for (const Partition& rho : partitions_of(m)) {
        long long count = factorial(m) / z_order(rho);
        sum += Rat(count) * (rho == split ? w1_brute : dl_value(type, rho, q));
      }
      sums.push_back(sum);
    }
    block_sizes.push_back(static_cast<long long>(lie.size()));
    block_sums.push_back(std::move(sums));
  }
  // Composite check over all tuples: the product of block sums must equal
  // |W_L| at every point of l^F.
  Rat expected(levi_weyl_order(comp));
  std::vector<long long> idx(comp.size(), 0);
  while (true) {
    Rat prod(1);
    for (size_t i = 0; i < comp.size(); ++i) prod *= block_sums[i][idx[i]];
    if (prod != expected) {
      std::ostringstream os;
      os << "tuple (";
      for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
      os << ")";
      return fail_report(name, os.str());
    }
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == block_sizes[i]) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return pass_report(name);
}

IdentityReport verify_f_identity_group(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  std::string name = cell_name(g, p, "f_{P}^{G} equals the averaged character sum");
  const long long q = g.q();
  const long long wl = levi_weyl_order(p.comp);
  for (const ClassDatum& c : group_orbits(g, b).classes) {
    Rat formula(0);
    for (const auto& [rho, count] : levi_cycle_types(p.comp))
      formula += Rat(count) * dl_value(c.type, rho, q);
    formula /= Rat(wl);
    Rat brute(f_parabolic_group(g, p, c.rep, b));
    if (brute != formula) return fail_report(name, "class rep " + c.rep.to_string());
  }
  return pass_report(name);
}

IdentityReport verify_f_identity_lie(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  std::string name = cell_name(g, p, "f_{p}^{g} equals the averaged induction sum");
  const long long q = g.q();
  const long long wl = levi_weyl_order(p.comp);
  for (const ClassDatum& c : lie_orbits(g, b).classes) {
    Rat formula(0);
    for (const auto& [rho, count] : levi_cycle_types(p.comp))
      formula += Rat(count) * dl_value(c.type, rho, q);
    formula /= Rat(wl);
    Rat brute(f_parabolic_lie(g, p, c.rep, b));
    if (brute != formula) return fail_report(name, "orbit rep " + c.rep.to_string());
  }
  return pass_report(name);
}

IdentityReport verify_fourier_orthogonality(const GroupSpec& g, const Budget& b) {
  std::string name = "Fourier orthogonality on torus algebras of " + g.to_string();
  require_nondegenerate_kappa(g);
  (void)b;
  const int p = g.F()->p();
  for (const Partition& rho : partitions_of(g.n)) {
    TorusAlgebra t(rho, g.field);
    const long long N = t.size();
    // sum_y F(delta_y) must be |t| at zero and 0 elsewhere; F(delta_0) = 1.
    std::vector<CycInt> total(N, CycInt::zero(p));
    for (long long y = 0; y < N; ++y) {
      std::vector<CycInt> delta(N, CycInt::zero(p));
      delta[y] = CycInt::one(p);
      auto transformed = fourier_transform_torus(t, delta);
      if (y == 0)
        for (long long x = 0; x < N; ++x)
          if (transformed[x] != CycInt::one(p))
            return fail_report(name, "F(delta_0) not constant at rho=" + rho.to_string());
      for (long long x = 0; x < N; ++x) total[x] = total[x] + transformed[x];
    }
    for (long long x = 0; x < N; ++x) {
      CycInt expected = x == 0 ? CycInt::from_int(p, N) : CycInt::zero(p);
      if (total[x] != expected)
        return fail_report(name, "rho=" + rho.to_string() + " x-index=" + std::to_string(x));
    }
  }
  return pass_report(name);
}

IdentityReport verify_regular_decomposition(const GroupSpec& g, const Budget& b) {
  std::string name = "regular function decomposition on gl_" + std::to_string(g.n) +
                     "(F_" + std::to_string(g.q()) + ")";
  require_nondegenerate_kappa(g);
  if (g.kind != GroupKind::GL) throw ConfigError("regular decomposition implemented for GL");
  const long long q = g.q();
  const int n = g.n;
  const long long group_order = g.order();
  const long long lie_size = g.lie_size();
  const long long wg = factorial(n);

  // dim R_{T_w}^L(1) * Q_{T_w}^L(1) * |T_w| averaged over W must be |L^F|.
  {
    Rat acc(0);
    for (const Partition& rho : partitions_of(n)) {
      Rat st = steinberg_value(rho, n).eval(Rat(q));
      acc += Rat(wg / z_order(rho)) * st * st * Rat(torus_order(rho, q));
    }
    acc /= Rat(wg);
    if (acc != Rat(group_order)) return fail_report(name, "Steinberg-degree mass formula");
  }

  // Split-torus term by brute coset sums, per point.
  ParabolicSpec borel(std::vector<int>(n, 1));
  const Partition split(std::vector<int>(n, 1));
  const long long t_size = ipow(q, n);
  auto chi_torus = [&](const Mat& y) {
    return y.is_zero() ? Rat(t_size) : Rat(0);
  };
  auto split_brute = hc_induce(g, borel, chi_torus, b);

  auto lie = enumerate_lie_algebra(g, b);
  const GreenTable& gt = green_table(n);
  for (size_t xi = 0; xi < lie.size(); ++xi) {
    const Mat& x = lie[xi];
    JordanPairAdd jp = jordan_add(x);
    bool nil = jp.s.is_zero();
    Partition lambda = nil ? Partition(jp.n.nilpotent_jordan_type()) : Partition(std::vector<int>{});

    Rat rhs(0);
    for (const Partition& rho : partitions_of(n)) {
      Rat v;  // R_{t_w}^{l}(chi_{t_w})(x)
      if (rho == split) {
        v = split_brute[xi];
        Rat v_formula = nil ? Rat(torus_lie_size(rho, q)) * gt.at(lambda, rho).eval(Rat(q)) : Rat(0);
        if (v != v_formula)
          return fail_report(name, "split chi-induction mismatch at x=" + x.to_string());
      } else {
        v = nil ? Rat(torus_lie_size(rho, q)) * gt.at(lambda, rho).eval(Rat(q)) : Rat(0);
      }
      Rat st = steinberg_value(rho, n).eval(Rat(q));
      rhs += Rat(wg / z_order(rho)) * st *
             (Rat(torus_order(rho, q)) / Rat(torus_lie_size(rho, q))) * v;
    }
    rhs *= Rat(lie_size) / (Rat(wg) * Rat(group_order));
    Rat lhs = x.is_zero() ? Rat(lie_size) : Rat(0);
    if (lhs != rhs) return fail_report(name, "chi_l identity at x=" + x.to_string());
  }
  return pass_report(name);
}

IdentityReport verify_lemma_sums(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  std::string name = cell_name(g, p, "k equals the f-sum over representatives");
  // Group case.
  {
    const OrbitData& orbits = group_orbits(g, b);
    std::unordered_set<int> meets;
    for (const Mat& x : enumerate_parabolic(g, p, b)) meets.insert(orbits.orbit_of.at(x.encode()));
    long long sum = 0;
    for (int idx : meets) sum += f_parabolic_group(g, p, orbits.classes[idx].rep, b);
    long long k = k_group(g, p, Engine::kBrute, b).brute.value();
    if (sum != k) return fail_report(name, "group case: sum=" + std::to_string(sum) + " k=" + std::to_string(k));
  }
  // Parabolic subalgebra case.
  {
    const OrbitData& orbits = lie_orbits(g, b);
    std::unordered_set<int> meets;
    for (const Mat& x : enumerate_lie_parabolic(g, p, b)) meets.insert(orbits.orbit_of.at(x.encode()));
    long long sum = 0;
    for (int idx : meets) sum += f_parabolic_lie(g, p, orbits.classes[idx].rep, b);
    long long k = k_lie(g, p, Engine::kBrute, b).brute.value();
    if (sum != k) return fail_report(name, "lie case: sum=" + std::to_string(sum) + " k=" + std::to_string(k));
  }
  // Nilradical case, weighted by |L^F|.
  {
    const OrbitData& orbits = lie_orbits(g, b);
    std::unordered_set<int> meets;
    for (const Mat& x : enumerate_nilradical(g, p, b)) meets.insert(orbits.orbit_of.at(x.encode()));
    long long sum = 0;
    for (int idx : meets) sum += f_nilradical_lie(g, p, orbits.classes[idx].rep, b);
    sum *= p.levi_order(g);
    long long k = k_nil(g, p, Engine::kBrute, b).brute.value();
    if (sum != k) return fail_report(name, "nil case: sum=" + std::to_string(sum) + " k=" + std::to_string(k));
  }
  return pass_report(name);
}

IdentityReport verify_hc_induction(const GroupSpec& g, const ParabolicSpec& p, const Budget& b) {
  std::string name = cell_name(g, p, "Harish-Chandra induction of 1 and chi");
  auto lie = enumerate_lie_algebra(g, b);
  auto ones = hc_induce(g, p, [](const Mat&) { return Rat(1); }, b);
  for (size_t i = 0; i < lie.size(); ++i)
    if (ones[i] != Rat(f_parabolic_lie(g, p, lie[i], b)))
      return fail_report(name, "R(1_l) != f_p at x=" + lie[i].to_string());

  long long levi_lie = 1;
  for (int m : p.comp) levi_lie *= ipow(g.q(), m * m);
  auto chis = hc_induce(g, p, [&](const Mat& y) { return y.is_zero() ? Rat(levi_lie) : Rat(0); }, b);
  for (size_t i = 0; i < lie.size(); ++i)
    if (chis[i] != Rat(levi_lie) * Rat(f_nilradical_lie(g, p, lie[i], b)))
      return fail_report(name, "R(chi_l) != |l| f_n at x=" + lie[i].to_string());

  if (p.comp.size() == 1) {
    // p = g: the induction is the identity transform on invariant functions.
    auto invariant = [](const Mat& y) {
      Poly chi = y.charpoly();
      Rat acc(0);
      for (int c : chi.coeffs()) acc = acc * Rat(1000) + Rat(c + 1);
      return acc;
    };
    auto values = hc_induce(g, p, invariant, b);
    for (size_t i = 0; i < lie.size(); ++i)
      if (values[i] != invariant(lie[i]))
        return fail_report(name, "identity transform failed at x=" + lie[i].to_string());
  }
  return pass_report(name);
}

std::vector<IdentityReport> verify_suite(const GroupSpec& g, const std::vector<std::vector<int>>& comps,
                                         const Budget& b) {
  require_nondegenerate_kappa(g);
  std::vector<IdentityReport> out;
  if (g.kind == GroupKind::GL) {
    out.push_back(verify_trivial_decomposition_group(g, b));
    out.push_back(verify_fourier_orthogonality(g, b));
    out.push_back(verify_regular_decomposition(g, b));
  }
  for (const auto& comp : comps) {
    ParabolicSpec p(comp);
    out.push_back(verify_normalizers(g, p, b));
    out.push_back(verify_semisimple_into_levi_group(g, p, b));
    out.push_back(verify_semisimple_into_levi_lie(g, p, b));
    out.push_back(verify_lemma_sums(g, p, b));
    out.push_back(verify_hc_induction(g, p, b));
    if (g.kind == GroupKind::GL) {
      out.push_back(verify_f_identity_group(g, p, b));
      out.push_back(verify_f_identity_lie(g, p, b));
      out.push_back(verify_trivial_decomposition_additive(g, comp, b));
    }
  }
  return out;
}

}  // namespace parcount
