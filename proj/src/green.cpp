#include "parcount/green.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "parcount/symfunc.hpp"

namespace parcount {

const QPoly& GreenTable::at(const Partition& lambda, const Partition& rho) const {
  int li = -1, ri = -1;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == lambda) li = static_cast<int>(i);
    if (parts[i] == rho) ri = static_cast<int>(i);
  }
  PARCOUNT_CHECK(li >= 0 && ri >= 0, "partition outside the Green table index");
  return table[li][ri];
}

std::string GreenTable::to_csv() const {
  std::ostringstream os;
  os << "unipotent_type";
  for (const auto& rho : parts) os << "," << rho.to_string();
  os << "\n";
  for (size_t l = 0; l < parts.size(); ++l) {
    os << parts[l].to_string();
    for (size_t r = 0; r < parts.size(); ++r) os << "," << table[l][r].to_string();
    os << "\n";
  }
  return os.str();
}

QPoly gl_order_p_prime_poly(int n) {
  QPoly r = QPoly::constant(Rat(1));
  for (int i = 1; i <= n; ++i) r = r * (QPoly::monomial(Rat(1), i) - QPoly::constant(Rat(1)));
  return r;
}

int torus_sign(const Partition& rho, int n) { return (n - rho.length()) % 2 == 0 ? 1 : -1; }

namespace {

std::unique_ptr<GreenTable> build_green_table(int n, int bound) {
  const HallLittlewood& hl = hall_littlewood_transition(n, bound);
  auto gt = std::make_unique<GreenTable>();
  gt->n = n;
  gt->parts = hl.index();
  const int N = static_cast<int>(gt->parts.size());
  gt->table.assign(N, std::vector<QPoly>(N));
  for (int l = 0; l < N; ++l) {
    int shift = gt->parts[l].n_stat();
    for (int r = 0; r < N; ++r) {
      const QPoly& x = hl.transition()[l][r];
      PARCOUNT_CHECK(x.degree() <= shift, "transition degree exceeds n(lambda)");
      // q^{n(lambda)} X(1/q)
      std::vector<Rat> coeffs(shift + 1, Rat(0));
      for (int i = 0; i <= x.degree(); ++i) coeffs[shift - i] = x.coeff(i);
      QPoly green(std::move(coeffs));
      PARCOUNT_CHECK(green.integer_coefficients(), "Green polynomial with non-integer coefficients");
      gt->table[l][r] = green;
    }
  }

  // Normalization self-checks; a failure means the convention is wrong.
  for (int l = 0; l < N; ++l) {
    QPoly sum;
    for (int r = 0; r < N; ++r) {
      Rat weight = Rat(1) / Rat(z_order(gt->parts[r]));
      sum = sum + gt->table[l][r].scaled(weight);
    }
    PARCOUNT_CHECK(sum == QPoly::constant(Rat(1)),
                   "trivial-character decomposition failed for lambda index " + std::to_string(l));
  }
  QPoly order_pprime = gl_order_p_prime_poly(n);
  for (int r = 0; r < N; ++r) {
    const Partition& rho = gt->parts[r];
    QPoly expected = QPoly::div_exact(order_pprime, torus_order_poly(rho));
    if (torus_sign(rho, n) < 0) expected = expected.scaled(Rat(-1));
    PARCOUNT_CHECK(gt->at(Partition(std::vector<int>(n, 1)), rho) == expected,
                   "Steinberg identity failed at rho=" + rho.to_string());
  }
  return gt;
}

}  // namespace

const GreenTable& green_table(int n, int bound) {
  if (n > bound)
    throw BoundError("Green table rank " + std::to_string(n) + " exceeds the bound " +
                     std::to_string(bound));
  if (n < 1) throw ConfigError("Green table rank must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GreenTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_green_table(n, bound)).first;
  return *it->second;
}

QPoly steinberg_value(const Partition& rho, int n) {
  const GreenTable& gt = green_table(n);
  QPoly value = gt.at(Partition(std::vector<int>(n, 1)), rho);
  QPoly expected = QPoly::div_exact(gl_order_p_prime_poly(n), torus_order_poly(rho));
  if (torus_sign(rho, n) < 0) expected = expected.scaled(Rat(-1));
  PARCOUNT_CHECK(value == expected, "Steinberg closed form mismatch at rho=" + rho.to_string());
  return value;
}

Rat dl_value(const TypeLabel& type, const Partition& rho, long long q) {
  auto shape = type.shape();
  auto profiles = assignment_profiles(shape, rho);
  if (profiles.empty()) return Rat(0);
  Rat total(0);
  for (const auto& profile : profiles) {
    Rat term(profile_index(rho, profile));
    for (size_t j = 0; j < shape.size(); ++j) {
      const auto& entry = type.entries[j];
      const GreenTable& gt = green_table(entry.m);
      Rat qd(ipow(q, entry.d));
      term *= gt.at(entry.lambda, profile[j]).eval(qd);
    }
    total += term;
  }
  PARCOUNT_CHECK(denominator(total) == 1, "Deligne-Lusztig value is not an integer");
  return total;
}

}  // namespace parcount
