#include <doctest.h>

#include "parcount/cyclotomic.hpp"

using namespace parcount;

TEST_CASE("character at zero and the F_2 relation") {
  auto f2 = FieldSpec::get(2, 1);
  CHECK(additive_char(f2.get(), 0) == CycInt::one(2));
  // char(1) = zeta = -1 in Z[zeta_2]; 1 + zeta = 0
  CycInt z = additive_char(f2.get(), 1);
  CHECK((CycInt::one(2) + z).is_zero());
}

TEST_CASE("character sums vanish over every constructed field") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {2, 3}}) {
    auto F = FieldSpec::get(p, k);
    CycInt sum = CycInt::zero(p);
    for (int a = 0; a < F->q(); ++a) sum = sum + additive_char(F.get(), a);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("character is multiplicative in addition") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {5, 1}}) {
    auto F = FieldSpec::get(p, k);
    for (int a = 0; a < F->q(); ++a)
      for (int b = 0; b < F->q(); ++b)
        CHECK(additive_char(F.get(), F->add(a, b)) ==
              additive_char(F.get(), a) * additive_char(F.get(), b));
  }
}

TEST_CASE("trace-zero elements of F_4 map to one") {
  auto F = FieldSpec::get(2, 2);
  for (int a = 0; a < 4; ++a)
    if (F->trace(a) == 0) CHECK(additive_char(F.get(), a) == CycInt::one(2));
}

TEST_CASE("ring arithmetic is exact and associative") {
  // (1 + zeta)^3 in Z[zeta_3]: zeta^2 = -1 - zeta, so (1+zeta)(1+zeta) =
  // 1 + 2 zeta + zeta^2 = zeta; (1+zeta)^3 = zeta + zeta^2 = -1.
  CycInt a = CycInt::one(3) + CycInt::zeta_pow(3, 1);
  CycInt b = a * a * a;
  CHECK(b == CycInt::from_int(3, -1));
  CycInt z5 = CycInt::zeta_pow(5, 1);
  CycInt p = CycInt::one(5);
  for (int i = 0; i < 5; ++i) p = p * z5;
  CHECK(p == CycInt::one(5));  // zeta_5^5 = 1
  CHECK_THROWS_AS(CycInt::from_int(3, 5).divided_exact(2), InvariantError);
  CHECK(CycInt::from_int(3, 6).divided_exact(2) == CycInt::from_int(3, 3));
}
