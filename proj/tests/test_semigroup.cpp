#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsres/semigroup.hpp"
#include "testutil.hpp"

using nsres::Int;
using nsres::NumericalSemigroup;

TEST_CASE("apery tail of <4,5,7>") {
  auto S = NumericalSemigroup::from_generators({4, 5, 7});
  CHECK(S.multiplicity() == 4);
  REQUIRE(S.apery_tail().size() == 3);
  CHECK(S.apery_tail()[0] == 5);
  CHECK(S.apery_tail()[1] == 10);
  CHECK(S.apery_tail()[2] == 7);
  CHECK(S.frobenius() == 6);
  CHECK(nsres::apery_set(S) == std::vector<Int>{0, 5, 7, 10});
}

TEST_CASE("apery_value uses the class-0 = m convention") {
  auto S = NumericalSemigroup::from_generators({4, 5, 7});
  CHECK(S.apery_value(0ul) == 4);
  CHECK(S.apery_value(4ul) == 4);
  CHECK(S.apery_value(1ul) == 5);
  CHECK(S.apery_value(5ul) == 5);
  CHECK(S.apery_value(Int(-1)) == 7);
  CHECK(S.apery_value(Int(-4)) == 4);
}

TEST_CASE("apery tails of the other fixture semigroups") {
  auto T = NumericalSemigroup::from_generators({4, 13, 31});
  CHECK(T.apery_tail() == std::vector<Int>{13, 26, 31});

  auto U = NumericalSemigroup::from_generators({4, 5, 6});
  CHECK(U.apery_tail() == std::vector<Int>{5, 6, 11});
  CHECK(U.frobenius() == 7);

  auto V = NumericalSemigroup::from_generators({4, 5, 6, 7});
  CHECK(V.apery_tail() == std::vector<Int>{5, 6, 7});
  CHECK(V.frobenius() == 3);

  auto W = NumericalSemigroup::from_generators({2, 3});
  CHECK(W.apery_tail() == std::vector<Int>{3});
  CHECK(W.frobenius() == 1);

  auto N = NumericalSemigroup::from_generators({1});
  CHECK(N.apery_tail().empty());
  CHECK(N.frobenius() == -1);
  CHECK(N.contains(0));
}

TEST_CASE("membership") {
  auto S = NumericalSemigroup::from_generators({4, 5, 7});
  for (long n : {0, 4, 5, 7, 8, 9, 10, 11, 12, 13, 100})
    CHECK(S.contains(Int(n)));
  for (long n : {1, 2, 3, 6, -1, -4})
    CHECK_FALSE(S.contains(Int(n)));
}

TEST_CASE("minimal generators and MED") {
  auto S = NumericalSemigroup::from_generators({4, 5, 7});
  CHECK(S.minimal_generators() == std::vector<unsigned long>{4, 5, 7});
  CHECK_FALSE(S.is_med());

  auto V = NumericalSemigroup::from_generators({4, 5, 6, 7});
  CHECK(V.minimal_generators() == std::vector<unsigned long>{4, 5, 6, 7});
  CHECK(V.is_med());

  auto W = NumericalSemigroup::from_generators({2, 3});
  CHECK(W.is_med());

  // Redundant input generators are dropped from the minimal system.
  auto R = NumericalSemigroup::from_generators({4, 5, 6, 7, 9, 13});
  CHECK(R.minimal_generators() == std::vector<unsigned long>{4, 5, 6, 7});
  CHECK(R == V);
}

TEST_CASE("bad generator sets are rejected") {
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}),
                  nsres::GcdNotOneError);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({}),
                  nsres::GcdNotOneError);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 0}),
                  nsres::GcdNotOneError);
  CHECK_NOTHROW(NumericalSemigroup::from_generators({0, 4, 5, 7}));
}

TEST_CASE("maximal factorization lengths") {
  auto S = NumericalSemigroup::from_generators({4, 5, 7});
  CHECK(S.max_factorization_length(0) == 0);
  CHECK(S.max_factorization_length(4) == 1);
  CHECK(S.max_factorization_length(7) == 1);
  CHECK(S.max_factorization_length(9) == 2);
  CHECK(S.max_factorization_length(14) == 3);  // 4+5+5 beats 7+7
  CHECK(S.max_factorization_length(20) == 5);
  CHECK(S.max_factorization_length(6) == -1);
  CHECK(S.max_factorization_length(-3) == -1);

  auto L = S.max_length_table(20);
  REQUIRE(L.size() == 21);
  CHECK(L[20] == 5);
  CHECK(L[6] == -1);
}

TEST_CASE("random semigroups: tail values are minimal in their class") {
  std::mt19937_64 rng(20260816);
  for (int trial = 0; trial < 100; ++trial) {
    unsigned long m = 2 + rng() % 7;
    auto S = nsres::testutil::random_semigroup(rng, m);
    REQUIRE(S.multiplicity() == m);
    const auto& tail = S.apery_tail();
    REQUIRE(tail.size() == m - 1);
    for (unsigned long i = 1; i < m; ++i) {
      const Int& a = tail[i - 1];
      CHECK(nsres::mod_floor(a, Int(m)) == i);
      CHECK(a > static_cast<long>(m));
      CHECK(S.contains(a));
      CHECK_FALSE(S.contains(a - static_cast<long>(m)));
    }
    // Every minimal generator really is irreducible.
    auto gens = S.minimal_generators();
    for (unsigned long g : gens) {
      bool splits = false;
      for (unsigned long h : gens) {
        if (h < g && S.contains(Int(g - h)) && g - h > 0) {
          // g = h + (g-h) with both parts in S* means reducible.
          splits = true;
        }
      }
      CHECK_FALSE(splits);
    }
  }
}

TEST_CASE("printing") {
  auto S = NumericalSemigroup::from_generators({4, 5, 7});
  CHECK(nsres::to_string(S) == "<4,5,7>");
}
