#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsres/ring.hpp"
#include "testutil.hpp"

using nsres::Binomial;
using nsres::GradedKind;
using nsres::Int;
using nsres::Monomial;
using nsres::NumericalSemigroup;
using nsres::Rat;
using nsres::RingElement;

namespace {
NumericalSemigroup NS(std::vector<unsigned long> g) {
  return NumericalSemigroup::from_generators(std::move(g));
}
Monomial M(std::vector<unsigned long> e) { return Monomial{std::move(e)}; }
}  // namespace

TEST_CASE("s_degree") {
  auto S = NS({4, 5, 7});
  CHECK(nsres::s_degree(M({2, 0, 0, 1}), S) == 15);  // y^2 x_3
  CHECK(nsres::s_degree(M({0, 1, 1, 0}), S) == 15);  // x_1 x_2
  CHECK(nsres::s_degree(M({0, 0, 0, 0}), S) == 0);
  CHECK_THROWS_AS(nsres::s_degree(M({1, 2}), S), nsres::LengthMismatchError);
}

TEST_CASE("toric generators of <4,5,7>") {
  auto gens = nsres::toric_generators(NS({4, 5, 7}));
  REQUIRE(gens.size() == 6);
  CHECK(gens[0] == Binomial{M({0, 2, 0, 0}), M({0, 0, 1, 0})});  // x_1^2 - x_2
  CHECK(gens[1] == Binomial{M({0, 1, 1, 0}), M({2, 0, 0, 1})});  // x_1x_2 - y^2x_3
  CHECK(gens[2] == Binomial{M({0, 1, 0, 1}), M({3, 0, 0, 0})});  // x_1x_3 - y^3
  CHECK(gens[3] == Binomial{M({0, 0, 2, 0}), M({5, 0, 0, 0})});  // x_2^2 - y^5
  CHECK(gens[4] == Binomial{M({0, 0, 1, 1}), M({3, 1, 0, 0})});  // x_2x_3 - y^3x_1
  CHECK(gens[5] == Binomial{M({0, 0, 0, 2}), M({1, 0, 1, 0})});  // x_3^2 - yx_2
}

TEST_CASE("toric generators of <4,13,31> and <2,3>") {
  auto gens = nsres::toric_generators(NS({4, 13, 31}));
  REQUIRE(gens.size() == 6);
  CHECK(gens[0] == Binomial{M({0, 2, 0, 0}), M({0, 0, 1, 0})});
  CHECK(gens[1] == Binomial{M({0, 1, 1, 0}), M({2, 0, 0, 1})});
  CHECK(gens[2] == Binomial{M({0, 1, 0, 1}), M({11, 0, 0, 0})});
  CHECK(gens[3] == Binomial{M({0, 0, 2, 0}), M({13, 0, 0, 0})});
  CHECK(gens[4] == Binomial{M({0, 0, 1, 1}), M({11, 1, 0, 0})});
  CHECK(gens[5] == Binomial{M({0, 0, 0, 2}), M({9, 0, 1, 0})});

  auto pair = nsres::toric_generators(NS({2, 3}));
  REQUIRE(pair.size() == 1);
  CHECK(pair[0] == Binomial{M({0, 2}), M({3, 0})});
}

TEST_CASE("interior semigroup generators all carry y") {
  for (const auto& bin : nsres::toric_generators(NS({4, 5, 6, 7})))
    CHECK(bin.rhs.e[0] >= 1);
}

TEST_CASE("normal form") {
  auto S = NS({4, 5, 7});
  // x_1^2 - x_2 vanishes in R.
  CHECK(nsres::normal_form({{Rat(1), M({0, 2, 0, 0})}, {Rat(-1), M({0, 0, 1, 0})}},
                           S)
            .is_zero());
  // x_1x_2 - yx_3 does not: degrees 15 and 11 differ.
  auto f = nsres::normal_form(
      {{Rat(1), M({0, 1, 1, 0})}, {Rat(-1), M({1, 0, 0, 1})}}, S);
  CHECK(f == RingElement::term(15, 1) + RingElement::term(11, -1));
  CHECK(nsres::render(f) == "t^15 - t^11");
  CHECK(nsres::normal_form({}, S).is_zero());
}

TEST_CASE("ring element arithmetic and rendering") {
  RingElement zero;
  CHECK(nsres::render(zero) == "0");
  CHECK(nsres::render(RingElement::term(0, 1)) == "1");
  CHECK(nsres::render(RingElement::term(0, -3)) == "-3");
  CHECK(nsres::render(RingElement::term(8, Rat(5, 2))) == "5/2 t^8");
  CHECK(nsres::render(RingElement::term(11, -1)) == "-t^11");

  auto f = RingElement::term(4, 1) + RingElement::term(0, 2);
  auto g = RingElement::term(4, -1) + RingElement::term(7, 1);
  CHECK(nsres::render(f * g) ==
        "t^11 - t^8 + 2 t^7 - 2 t^4");
  CHECK((f - f).is_zero());
  CHECK(f + (-f) == zero);
  CHECK(f.scaled(0).is_zero());
  CHECK(f.scaled(Rat(1, 2)) ==
        RingElement::term(4, Rat(1, 2)) + RingElement::term(0, 1));
}

TEST_CASE("every toric binomial is S-homogeneous and vanishes in R") {
  std::mt19937_64 rng(90125);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned long m = 2 + rng() % 7;
    auto S = nsres::testutil::random_semigroup(rng, m);
    for (const auto& bin : nsres::toric_generators(S)) {
      CHECK(nsres::s_degree(bin.lhs, S) == nsres::s_degree(bin.rhs, S));
      CHECK(nsres::normal_form({{Rat(1), bin.lhs}, {Rat(-1), bin.rhs}}, S)
                .is_zero());
    }
  }
}

TEST_CASE("normal_form is a ring homomorphism") {
  std::mt19937_64 rng(555);
  auto random_poly = [&](const NumericalSemigroup& S) {
    std::vector<std::pair<Rat, Monomial>> poly;
    size_t nterms = 1 + rng() % 4;
    for (size_t t = 0; t < nterms; ++t) {
      Monomial mon = Monomial::one(S.multiplicity());
      for (auto& ei : mon.e) ei = rng() % 3;
      poly.push_back({Rat(long(rng() % 7) - 3), mon});
    }
    return poly;
  };
  for (int trial = 0; trial < 40; ++trial) {
    auto S = nsres::testutil::random_semigroup(rng, 2 + rng() % 6);
    auto f = random_poly(S), g = random_poly(S);
    std::vector<std::pair<Rat, Monomial>> sum = f, prod;
    sum.insert(sum.end(), g.begin(), g.end());
    for (const auto& [cf, mf] : f)
      for (const auto& [cg, mg] : g) prod.push_back({cf * cg, mf.times(mg)});
    CHECK(nsres::normal_form(sum, S) ==
          nsres::normal_form(f, S) + nsres::normal_form(g, S));
    CHECK(nsres::normal_form(prod, S) ==
          nsres::normal_form(f, S) * nsres::normal_form(g, S));
  }
}

TEST_CASE("graded monomial bases") {
  auto S = NS({4, 5, 7});
  auto deg10 = nsres::graded_basis(GradedKind::Q, S, 10);
  REQUIRE(deg10.size() == 2);
  CHECK(deg10[0] == M({0, 0, 1, 0}));  // x_2
  CHECK(deg10[1] == M({0, 2, 0, 0}));  // x_1^2
  CHECK(nsres::graded_basis(GradedKind::Q, S, 0) ==
        std::vector<Monomial>{M({0, 0, 0, 0})});
  CHECK(nsres::graded_basis(GradedKind::Q, S, 3).empty());

  CHECK(nsres::graded_basis(GradedKind::R, S, 6).empty());
  CHECK(nsres::graded_basis(GradedKind::R, S, 7) ==
        std::vector<Monomial>{M({7})});

  CHECK(nsres::variable_degrees(GradedKind::Qmin, S) ==
        std::vector<Int>{4, 5, 7});
  CHECK(nsres::graded_basis(GradedKind::Qmin, S, 10) ==
        std::vector<Monomial>{M({0, 2, 0})});

  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    auto T = nsres::testutil::random_semigroup(rng, 2 + rng() % 5);
    Int n = rng() % 40;
    size_t dim = nsres::graded_basis(GradedKind::R, T, n).size();
    CHECK(dim == (T.contains(n) ? 1u : 0u));
    for (const auto& mon : nsres::graded_basis(GradedKind::Q, T, n))
      CHECK(nsres::s_degree(mon, T) == n);
  }
}

TEST_CASE("monomial and binomial rendering") {
  auto S = NS({4, 5, 7});
  auto names = nsres::variable_names(GradedKind::Q, S);
  CHECK(names == std::vector<std::string>{"y", "x_1", "x_2", "x_3"});
  CHECK(nsres::render(M({2, 0, 0, 1}), names) == "y^2 x_3");
  CHECK(nsres::render(M({0, 0, 0, 0}), names) == "1");
  auto gens = nsres::toric_generators(S);
  CHECK(nsres::render(gens[1], names) == "x_1 x_2 - y^2 x_3");
  CHECK(nsres::render(gens[2], names) == "x_1 x_3 - y^3");
  CHECK(nsres::variable_names(GradedKind::R, S) ==
        std::vector<std::string>{"t"});
  CHECK(nsres::variable_names(GradedKind::Qmin, S) ==
        std::vector<std::string>{"u_4", "u_5", "u_7"});
}
