#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsres/errors.hpp"
#include "nsres/series.hpp"
#include "testutil.hpp"

using nsres::Int;
using nsres::NumericalSemigroup;
using nsres::RationalSeries;
using nsres::TruncatedSeries;

namespace {
NumericalSemigroup NS(std::vector<unsigned long> g) {
  return NumericalSemigroup::from_generators(std::move(g));
}

TruncatedSeries TS(std::vector<long> v) {
  std::vector<Int> c;
  for (long x : v) c.push_back(Int(x));
  return TruncatedSeries(std::move(c));
}
}  // namespace

TEST_CASE("truncated arithmetic") {
  auto a = TS({1, 3, 6});
  CHECK(a.bound() == 2);
  CHECK(a[0] == 1);
  CHECK(a[2] == 6);
  CHECK_THROWS_AS(a[3], nsres::Error);
  CHECK_THROWS_AS(TruncatedSeries(std::vector<Int>{}), nsres::Error);

  CHECK(TruncatedSeries::one(3) == TS({1, 0, 0, 0}));
  CHECK(TruncatedSeries::z(3) == TS({0, 1, 0, 0}));
  CHECK(TruncatedSeries::zero(1) == TS({0, 0}));

  CHECK(a.truncated(1) == TS({1, 3}));
  CHECK_THROWS_AS(a.truncated(5), nsres::Error);
  CHECK(a.padded(4) == TS({1, 3, 6, 0, 0}));

  auto b = TS({1, 1, 1, 1});
  // Operations truncate to the smaller window.
  CHECK(a + b == TS({2, 4, 7}));
  CHECK(a - b == TS({0, 2, 5}));
  CHECK(a * b == TS({1, 4, 10}));
  CHECK(a.scaled(Int(-2)) == TS({-2, -6, -12}));
  CHECK(pow(TS({1, 1, 0, 0, 0}), 4) == TS({1, 4, 6, 4, 1}));
  CHECK(pow(b, 0) == TruncatedSeries::one(3));

  CHECK(a.agrees_through(b.scaled(Int(1)), 0));
  CHECK(!a.agrees_through(b, 1));
  CHECK_THROWS_AS(a.agrees_through(b, 3), nsres::Error);

  CHECK(a.text() == "1 + 3z + 6z^2");
  CHECK(TS({1, -1}).text() == "1 - z");
  CHECK(TS({0, 1}).text() == "z");
  CHECK(TruncatedSeries::zero(2).text() == "0");
}

TEST_CASE("rational expansion") {
  auto geom = RationalSeries({Int(1)}, {Int(1), Int(-1)});
  CHECK(geom.expand(4) == TS({1, 1, 1, 1, 1}));
  CHECK(geom.text() == "(1) / (1 - z)");

  auto flipped = RationalSeries({Int(-1)}, {Int(-1), Int(1)});
  CHECK(flipped.expand(3) == TS({1, 1, 1, 1}));

  auto med4 = RationalSeries({Int(1), Int(1)}, {Int(1), Int(-3)});
  CHECK(med4.expand(4) == TS({1, 4, 12, 36, 108}));
  CHECK(med4.text() == "(1 + z) / (1 - 3z)");

  CHECK_THROWS_AS(RationalSeries({Int(1)}, {Int(0), Int(0)}),
                  nsres::ZeroPolynomialError);
  CHECK_THROWS_AS(RationalSeries({Int(1)}, {Int(2), Int(1)}), nsres::Error);
}

TEST_CASE("med closed forms") {
  CHECK(nsres::med_PIQ(2) == TS({1}));
  CHECK(nsres::med_PIQ(3) == TS({3, 2}));
  CHECK(nsres::med_PIQ(4) == TS({6, 8, 3}));
  CHECK(nsres::med_PIQ(5) == TS({10, 20, 15, 4}));

  CHECK(nsres::med_poincare(2).expand(3) == TS({1, 2, 2, 2}));
  CHECK(nsres::med_poincare(4).expand(3) == TS({1, 4, 12, 36}));
  CHECK(nsres::med_poincare(5).expand(3)[3] == 80);

  // 1 - z^2 P = (1+z)^{m-1} (1 - (m-1)z), coefficientwise through z^12.
  for (unsigned long m = 2; m <= 8; ++m) {
    auto z2 = pow(TruncatedSeries::z(12), 2);
    auto lhs = TruncatedSeries::one(12) - z2 * nsres::med_PIQ(m).padded(12);
    auto rhs = pow(TS({1, 1}).padded(12), m - 1) *
               TS({1, 1 - static_cast<long>(m)}).padded(12);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("poincare series through the closed forms") {
  CHECK(nsres::poincare_truncated(NS({4, 5, 7}), 5) ==
        TS({1, 3, 6, 12, 24, 48}));
  CHECK(nsres::poincare_truncated(NS({4, 5, 6}), 5) ==
        TS({1, 3, 5, 7, 9, 11}));
  CHECK(nsres::poincare_truncated(NS({4, 5, 6, 7}), 3) == TS({1, 4, 12, 36}));
  CHECK(nsres::poincare_truncated(NS({4, 5}), 4) == TS({1, 2, 2, 2, 2}));
  CHECK(nsres::poincare_truncated(NS({2, 3}), 4) == TS({1, 2, 2, 2, 2}));
  // No closed form: falls through to the tensor computation.
  CHECK(nsres::poincare_truncated(NS({5, 6, 19}), 2)[1] == 3);
}

TEST_CASE("default betti polynomial of the defining ideal") {
  CHECK(nsres::default_piq(NS({4, 5, 6, 7})) == TS({6, 8, 3}));
  CHECK(nsres::default_piq(NS({4, 5})) == TS({1}));
  CHECK(nsres::default_piq(NS({4, 5, 6})) == TS({2, 1}));
  CHECK(nsres::default_piq(NS({4, 5, 7})) == TS({3, 2}));
  // Codimension-two arithmetically Cohen-Macaulay: 3 generators, 2 syzygies.
  // The oracle route scans a wide degree window; a prime field keeps the
  // elimination cheap and the Betti numbers match the rational ones here.
  CHECK(nsres::default_piq(NS({5, 6, 19}), true, nsres::FieldChoice::fp(32003)) ==
        TS({3, 2}));
  CHECK_THROWS_AS(nsres::default_piq(NS({5, 6, 19}), false),
                  nsres::MissingPIQError);
}

TEST_CASE("golod comparisons") {
  CHECK(nsres::golod_check(NS({4, 5, 6, 7}), 10));
  CHECK(nsres::golod_check(NS({2, 3}), 8));
  CHECK(nsres::golod_check(NS({4, 5}), 8));
  CHECK(nsres::golod_check(NS({4, 5, 7}), 10));
  CHECK(nsres::golod_check(NS({4, 5, 7}), 10, TS({3, 2})));
  CHECK(nsres::golod_check(NS({4, 13, 31}), 6));
  CHECK(!nsres::golod_check(NS({4, 5, 6}), 10));

  auto rep = nsres::golod_report(NS({4, 5, 6}), 5);
  CHECK(rep.generators == 3);
  CHECK(rep.piq == TS({2, 1}));
  CHECK(rep.piq_source == "multiplicity-4 face");
  CHECK(rep.lhs == TS({1, 3, 5, 7, 9, 11}));
  CHECK(rep.rhs[2] == 5);
  CHECK(rep.rhs[3] == 8);  // first divergence
  CHECK(!rep.equal);

  auto med = nsres::golod_report(NS({4, 5, 6, 7}), 6);
  CHECK(med.piq_source == "med formula");
  CHECK(med.rhs == nsres::med_poincare(4).expand(6));
  CHECK(med.equal);

  auto sup = nsres::golod_report(NS({4, 5, 7}), 4, TS({3, 2}));
  CHECK(sup.piq_source == "supplied");
  CHECK(sup.rhs == TS({1, 3, 6, 12, 24}));
  CHECK(sup.equal);
}
