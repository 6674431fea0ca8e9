#include <doctest.h>

#include "oracles.hpp"
#include "parcount/field.hpp"

using namespace parcount;

TEST_CASE("prime field and canonical moduli") {
  auto f2 = FieldSpec::get(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->modulus() == std::vector<int>{0, 1});  // placeholder x

  auto f4 = FieldSpec::get(2, 2);
  CHECK(f4->q() == 4);
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});  // x^2+x+1, the unique choice

  auto f9 = FieldSpec::get(3, 2);
  CHECK(f9->modulus() == std::vector<int>{1, 0, 1});  // x^2+1
  // independent irreducibility check: no roots in F_3
  for (int a = 0; a < 3; ++a) CHECK((a * a + 1) % 3 != 0);

  auto f8 = FieldSpec::get(2, 3);
  CHECK(f8->modulus() == std::vector<int>{1, 1, 0, 1});  // x^3+x+1
}

TEST_CASE("non-prime characteristic rejected") {
  CHECK_THROWS_AS(FieldSpec::get(4, 1), ConfigError);
  CHECK_THROWS_AS(FieldSpec::get(1, 1), ConfigError);
  CHECK_THROWS_AS(FieldSpec::get(2, 0), ConfigError);
}

TEST_CASE("field axioms under random sampling") {
  uint64_t seed = 7;
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 1}}) {
    auto F = FieldSpec::get(p, k);
    const long long q = F->q();
    for (int trial = 0; trial < 200; ++trial) {
      int a = static_cast<int>(oracles::lcg(seed) % q);
      int b = static_cast<int>(oracles::lcg(seed) % q);
      int c = static_cast<int>(oracles::lcg(seed) % q);
      CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
      // Frobenius is additive and multiplicative
      CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
      CHECK(F->frobenius(F->mul(a, b)) == F->mul(F->frobenius(a), F->frobenius(b)));
      CHECK(F->pow(a, q) == a);  // q-th power is the identity on F_q
    }
  }
}

TEST_CASE("trace lands in the prime field and is additive") {
  auto F = FieldSpec::get(2, 2);
  for (int a = 0; a < 4; ++a) {
    CHECK(F->trace(a) < 2);
    for (int b = 0; b < 4; ++b) CHECK(F->trace(F->add(a, b)) == (F->trace(a) + F->trace(b)) % 2);
  }
  // over F_4 the trace-zero elements are exactly the prime subfield
  CHECK(F->trace(0) == 0);
  CHECK(F->trace(1) == 0);
}

TEST_CASE("serialization format") {
  CHECK(FieldSpec::get(2, 2)->to_string() == "2^2/1,1,1");
  CHECK(FieldSpec::get(5, 1)->to_string() == "5^1/0,1");
}
