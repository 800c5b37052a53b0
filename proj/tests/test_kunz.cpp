#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsres/kunz.hpp"
#include "testutil.hpp"

using nsres::BMatrix;
using nsres::FaceSignature;
using nsres::Int;
using nsres::NumericalSemigroup;

namespace {
NumericalSemigroup NS(std::vector<unsigned long> g) {
  return NumericalSemigroup::from_generators(std::move(g));
}
}  // namespace

TEST_CASE("b-matrix of <4,5,7>") {
  BMatrix B(NS({4, 5, 7}));
  CHECK(B.at(1, 1) == 0);
  CHECK(B.at(1, 2) == 2);
  CHECK(B.at(1, 3) == 2);
  CHECK(B.at(2, 2) == 4);
  CHECK(B.at(2, 3) == 3);
  CHECK(B.at(3, 3) == 1);
  // Symmetry and residue reduction.
  CHECK(B.at(2, 1) == 2);
  CHECK(B.at(5, 6) == 2);
  // The class-0 convention a_0 = m makes every 0-row entry 1.
  CHECK(B.at(0, 0) == 1);
  CHECK(B.at(0, 2) == 1);
  CHECK(B.at(4, 3) == 1);
}

TEST_CASE("b-matrices of the other fixtures") {
  BMatrix T(NS({4, 13, 31}));
  CHECK(T.at(1, 1) == 0);
  CHECK(T.at(1, 2) == 2);
  CHECK(T.at(1, 3) == 10);
  CHECK(T.at(2, 2) == 12);
  CHECK(T.at(2, 3) == 11);
  CHECK(T.at(3, 3) == 9);

  BMatrix U(NS({4, 5, 6}));
  CHECK(U.at(1, 1) == 1);
  CHECK(U.at(1, 2) == 0);
  CHECK(U.at(1, 3) == 3);
  CHECK(U.at(2, 2) == 2);
  CHECK(U.at(2, 3) == 3);
  CHECK(U.at(3, 3) == 4);

  BMatrix V(NS({4, 5, 6, 7}));
  for (unsigned long i = 1; i <= 3; ++i)
    for (unsigned long j = i; j <= 3; ++j) CHECK(V.at(i, j) > 0);

  // <4,5> sits on the ray a_2 = 2a_1, a_3 = 3a_1; there b_13 = a_1 - 1.
  BMatrix R(NS({4, 5}));
  CHECK(R.at(1, 1) == 0);
  CHECK(R.at(1, 2) == 0);
  CHECK(R.at(1, 3) == 4);
}

TEST_CASE("face signatures") {
  auto sig = nsres::face_signature(NS({4, 5, 7}));
  CHECK(sig.m == 4);
  CHECK(sig.tight_pairs ==
        std::set<std::pair<unsigned long, unsigned long>>{{1, 1}});

  CHECK(nsres::face_signature(NS({4, 5, 6})).tight_pairs ==
        std::set<std::pair<unsigned long, unsigned long>>{{1, 2}});
  CHECK(nsres::face_signature(NS({4, 5, 6, 7})).tight_pairs.empty());
  CHECK(nsres::face_signature(NS({4, 5})).tight_pairs ==
        std::set<std::pair<unsigned long, unsigned long>>{{1, 1}, {1, 2}});
  // Pairs with i+j = 0 mod m never enter the signature, so <2,3> reads as
  // interior, matching its MED-ness.
  CHECK(nsres::face_signature(NS({2, 3})).tight_pairs.empty());
}

TEST_CASE("kunz posets") {
  auto P = nsres::kunz_poset(NS({4, 5, 7}));
  CHECK(P.less(0, 1));
  CHECK(P.less(0, 2));
  CHECK(P.less(0, 3));
  CHECK(P.less(1, 2));
  CHECK_FALSE(P.less(1, 3));
  CHECK_FALSE(P.less(2, 1));
  CHECK_FALSE(P.less(3, 2));
  auto covers = P.covers();
  CHECK(covers == std::vector<std::pair<unsigned long, unsigned long>>{
                      {0, 1}, {0, 3}, {1, 2}});

  auto Q = nsres::kunz_poset(NS({4, 5, 6, 7}));
  CHECK(Q.covers() == std::vector<std::pair<unsigned long, unsigned long>>{
                          {0, 1}, {0, 2}, {0, 3}});

  auto W = nsres::kunz_poset(NS({2, 3}));
  CHECK(W.covers() ==
        std::vector<std::pair<unsigned long, unsigned long>>{{0, 1}});
}

TEST_CASE("same_face on the fixture pairs") {
  auto S = NS({4, 5, 7});
  CHECK(nsres::same_face(S, NS({4, 13, 31})));
  CHECK_FALSE(nsres::same_face(S, NS({4, 5, 6})));
  CHECK(nsres::same_face(S, S));
  CHECK_FALSE(nsres::same_face(S, NS({5, 6, 7, 8, 9})));
}

TEST_CASE("in_cone") {
  CHECK(nsres::in_cone({5, 10, 7}));
  // All four inequalities and all congruences hold for (5,6,7); it is the
  // Apery tuple of <4,5,6,7>.
  CHECK(nsres::in_cone({5, 6, 7}));
  CHECK_FALSE(nsres::in_cone({6, 10, 7}));
  CHECK_FALSE(nsres::in_cone({5, 10, 3}));  // 3 < m
  CHECK_FALSE(nsres::in_cone({5, 26, 7}));  // 2*x_1 = 10 < x_2
  CHECK(nsres::in_cone({13, 26, 31}));
}

TEST_CASE("in_cone rejects violated inequalities") {
  // m = 4, x = (9, 6, 7): 2*x_3 = 14 >= x_2 ok, x_1+x_1 = 18 >= 6 ok,
  // x_2+x_3 = 13 >= 9 ok, x_1+x_2 = 15 >= 7 ok -> in cone.
  CHECK(nsres::in_cone({9, 6, 7}));
  // x = (5, 22, 7): x_1+x_2 = 27 >= 7, x_1+x_1 = 10 < 22 fails.
  CHECK_FALSE(nsres::in_cone({5, 22, 7}));
}

TEST_CASE("relabeling by units") {
  FaceSignature ray;
  ray.m = 4;
  ray.tight_pairs = {{1, 1}, {1, 2}};
  auto mirrored = nsres::relabel(ray, 3);
  CHECK(mirrored.tight_pairs ==
        std::set<std::pair<unsigned long, unsigned long>>{{3, 3}, {2, 3}});
  CHECK(nsres::relabel(mirrored, 3).tight_pairs == ray.tight_pairs);
  CHECK_THROWS_AS(nsres::relabel(ray, 2), nsres::Error);

  auto P = nsres::kunz_poset(NS({4, 5, 7}));
  auto P3 = nsres::relabel(P, 3);
  CHECK(P3.less(3, 2));
  CHECK_FALSE(P3.less(1, 2));
  CHECK(nsres::relabel(P3, 3) == P);
}

TEST_CASE("random semigroups: signature/poset/cone properties") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 80; ++trial) {
    unsigned long m = 2 + rng() % 7;
    auto S = nsres::testutil::random_semigroup(rng, m);
    BMatrix B(S);
    for (unsigned long i = 1; i < m; ++i)
      for (unsigned long j = i; j < m; ++j) {
        CHECK(B.at(i, j) >= 0);
        if ((i + j) % m == 0) CHECK(B.at(i, j) >= 1);
      }

    CHECK(nsres::face_signature(S).tight_pairs.empty() == S.is_med());
    CHECK(nsres::in_cone(S.apery_tail()));

    // Scaling the non-multiplicity generators by u = 1 mod m lands in the
    // same face with the same poset.
    unsigned long u = 1 + m * (1 + trial % 3);
    auto T = nsres::testutil::scaled_partner(S, u);
    CHECK(nsres::same_face(S, T));
    CHECK(nsres::kunz_poset(S) == nsres::kunz_poset(T));
    for (unsigned long i = 0; i + 1 < m; ++i)
      CHECK(T.apery_tail()[i] == u * S.apery_tail()[i]);
  }
}

TEST_CASE("same_face agrees with poset equality on random pairs") {
  std::mt19937_64 rng(777);
  std::vector<NumericalSemigroup> pool;
  for (int i = 0; i < 14; ++i)
    pool.push_back(nsres::testutil::random_semigroup(rng, 2 + rng() % 5));
  for (const auto& A : pool)
    for (const auto& B2 : pool) {
      if (A.multiplicity() != B2.multiplicity()) continue;
      CHECK(nsres::same_face(A, B2) ==
            (nsres::kunz_poset(A) == nsres::kunz_poset(B2)));
    }
}
