#include <doctest.h>

#include "oracles.hpp"
#include "parcount/matrix.hpp"

using namespace parcount;

TEST_CASE("characteristic polynomial of a companion matrix is the polynomial") {
  uint64_t seed = 29;
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto F = FieldSpec::get(p, k);
    for (int trial = 0; trial < 40; ++trial) {
      int deg = 1 + static_cast<int>(oracles::lcg(seed) % 4);
      std::vector<int> c(deg + 1);
      for (int i = 0; i < deg; ++i) c[i] = static_cast<int>(oracles::lcg(seed) % F->q());
      c[deg] = 1;
      Poly f(F.get(), c);
      CHECK(Mat::companion(f).charpoly() == f);
    }
  }
}

TEST_CASE("inverse, rank and kernel dimensions") {
  uint64_t seed = 31;
  auto F = FieldSpec::get(3, 1);
  for (int trial = 0; trial < 120; ++trial) {
    Mat m(F.get(), 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.set(i, j, static_cast<int>(oracles::lcg(seed) % 3));
    auto inv = m.inverse();
    CHECK(inv.has_value() == (m.det() != 0));
    if (inv) CHECK(m * *inv == Mat::identity(F.get(), 3));
    CHECK(static_cast<int>(m.kernel_basis().size()) == 3 - m.rank());
  }
}

TEST_CASE("nilpotent jordan types") {
  auto F = FieldSpec::get(2, 1);
  CHECK(Mat(F.get(), 2).nilpotent_jordan_type() == std::vector<int>{1, 1});
  CHECK(Mat::unit(F.get(), 2, 0, 1).nilpotent_jordan_type() == std::vector<int>{2});
  Mat n3 = Mat::unit(F.get(), 3, 0, 1);  // rank 1, square zero
  CHECK(n3.nilpotent_jordan_type() == std::vector<int>{2, 1});
  Mat reg = Mat::unit(F.get(), 3, 0, 1) + Mat::unit(F.get(), 3, 1, 2);
  CHECK(reg.nilpotent_jordan_type() == std::vector<int>{3});
  CHECK_THROWS_AS(Mat::identity(F.get(), 2).nilpotent_jordan_type(), InvariantError);
}

TEST_CASE("restriction to an invariant subspace") {
  auto F = FieldSpec::get(2, 1);
  // x = e_{01} + e_{12} preserves ker(x^2) = span(e0, e1)
  Mat x = Mat::unit(F.get(), 3, 0, 1) + Mat::unit(F.get(), 3, 1, 2);
  Mat x2 = x * x;
  auto basis = x2.kernel_basis();
  REQUIRE(basis.size() == 2);
  Mat r = restrict_to_subspace(x, basis);
  CHECK(r.n() == 2);
  CHECK(r.nilpotent_jordan_type() == std::vector<int>{2});
  // non-invariant subspace rejected
  std::vector<std::vector<int>> bad = {{0, 0, 1}};
  CHECK_THROWS_AS(restrict_to_subspace(x, bad), InvariantError);
}

TEST_CASE("encode/decode round trip and serialization") {
  auto F = FieldSpec::get(3, 1);
  uint64_t seed = 37;
  for (int trial = 0; trial < 50; ++trial) {
    Mat m(F.get(), 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.set(i, j, static_cast<int>(oracles::lcg(seed) % 3));
    CHECK(Mat::decode(F.get(), 2, m.encode()) == m);
  }
  Mat id = Mat::identity(F.get(), 2);
  CHECK(id.to_string() == "1;0;0;1");
}
