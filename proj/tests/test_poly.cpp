#include <doctest.h>

#include "oracles.hpp"
#include "parcount/poly.hpp"

using namespace parcount;

namespace {

// Independent irreducibility test: trial division by every monic
// polynomial of degree up to deg/2.
bool irreducible_by_trial_division(const Poly& f) {
  const FieldSpec* F = f.field();
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= F->q();
    for (long long v = 0; v < count; ++v) {
      std::vector<int> c(d + 1, 0);
      long long t = v;
      for (int i = 0; i < d; ++i) {
        c[i] = static_cast<int>(t % F->q());
        t /= F->q();
      }
      c[d] = 1;
      if (Poly::divmod(f, Poly(F, c)).second.is_zero()) return false;
    }
  }
  return true;
}

Poly from_coeffs(const FieldSpec* F, std::vector<int> c) { return Poly(F, std::move(c)); }

}  // namespace

TEST_CASE("factorization worked examples") {
  auto f3 = FieldSpec::get(3, 1);
  // x^2 - 1 = (x+1)(x+2) over F_3
  auto fs = poly_factor(from_coeffs(f3.get(), {2, 0, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == from_coeffs(f3.get(), {1, 1}));
  CHECK(fs[0].second == 1);
  CHECK(fs[1].first == from_coeffs(f3.get(), {2, 1}));
  CHECK(fs[1].second == 1);

  auto f2 = FieldSpec::get(2, 1);
  // x^2+x+1 irreducible over F_2
  auto fs2 = poly_factor(from_coeffs(f2.get(), {1, 1, 1}));
  REQUIRE(fs2.size() == 1);
  CHECK(fs2[0].second == 1);
  CHECK(fs2[0].first.degree() == 2);

  auto f5 = FieldSpec::get(5, 1);
  // (x-1)^2 over F_5
  auto fs3 = poly_factor(from_coeffs(f5.get(), {1, 3, 1}));  // x^2+3x+1 = (x+4)^2? no: (x-1)^2 = x^2-2x+1 = x^2+3x+1
  REQUIRE(fs3.size() == 1);
  CHECK(fs3[0].first == from_coeffs(f5.get(), {4, 1}));  // x+4 = x-1
  CHECK(fs3[0].second == 2);
}

TEST_CASE("zero polynomial rejected") {
  auto f2 = FieldSpec::get(2, 1);
  CHECK_THROWS_AS(poly_factor(Poly::zero(f2.get())), ConfigError);
}

TEST_CASE("p-th power multiplicities") {
  auto f2 = FieldSpec::get(2, 1);
  // x^2 (x+1) over F_2: derivative of the leftover square vanishes
  auto fs = poly_factor(from_coeffs(f2.get(), {0, 0, 1, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == Poly::x(f2.get()));
  CHECK(fs[0].second == 2);
  CHECK(fs[1].first == from_coeffs(f2.get(), {1, 1}));
  CHECK(fs[1].second == 1);
  // (x+1)^4 over F_2
  auto fs2 = poly_factor(from_coeffs(f2.get(), {1, 0, 0, 0, 1}));  // x^4+1 = (x+1)^4
  REQUIRE(fs2.size() == 1);
  CHECK(fs2[0].second == 4);
}

TEST_CASE("random factorizations recombine and are irreducible") {
  uint64_t seed = 13;
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}}) {
    auto F = FieldSpec::get(p, k);
    for (int trial = 0; trial < 60; ++trial) {
      int deg = 1 + static_cast<int>(oracles::lcg(seed) % 6);
      std::vector<int> c(deg + 1);
      for (int i = 0; i < deg; ++i) c[i] = static_cast<int>(oracles::lcg(seed) % F->q());
      c[deg] = 1;
      Poly f(F.get(), c);
      auto fs = poly_factor(f);
      Poly prod = Poly::one(F.get());
      for (const auto& [g, m] : fs) {
        CHECK(irreducible_by_trial_division(g));
        for (int i = 0; i < m; ++i) prod = prod * g;
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("irreducible counts match the necklace formula") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto F = FieldSpec::get(p, k);
    for (int d = 1; d <= 3; ++d) {
      long long count = 0;
      long long total = 1;
      for (int i = 0; i < d; ++i) total *= F->q();
      for (long long v = 0; v < total; ++v) {
        std::vector<int> c(d + 1, 0);
        long long t = v;
        for (int i = 0; i < d; ++i) {
          c[i] = static_cast<int>(t % F->q());
          t /= F->q();
        }
        c[d] = 1;
        if (irreducible_by_trial_division(Poly(F.get(), c))) ++count;
      }
      CHECK(count == count_monic_irreducibles(F->q(), d));
    }
  }
  // lowest irreducibles stay canonical
  auto f2 = FieldSpec::get(2, 1);
  CHECK(lowest_irreducible_of_degree(f2.get(), 2) == from_coeffs(f2.get(), {1, 1, 1}));
  CHECK(lowest_irreducible_of_degree(f2.get(), 3) == from_coeffs(f2.get(), {1, 1, 0, 1}));
}
