#pragma once

#include <set>
#include <utility>
#include <vector>

#include "nsres/semigroup.hpp"

namespace nsres {

// The matrix of b-values b_ij = (a_i + a_j - a_{(i+j) mod m}) / m taken with
// a_0 = m. Stored for 1 <= i <= j <= m-1; at() accepts arbitrary residues
// and resolves the class-0 convention, under which every entry touching
// class 0 equals 1.
class BMatrix {
 public:
  explicit BMatrix(const NumericalSemigroup& S);

  unsigned long m() const { return m_; }

  // b_{i mod m, j mod m}; symmetric.
  const Int& at(unsigned long i, unsigned long j) const;

  // Pairs with 1 <= i <= j <= m-1 in row-major order, for serialization.
  const std::vector<Int>& upper_entries() const { return entries_; }

 private:
  unsigned long m_;
  std::vector<Int> entries_;
  Int one_ = 1;
};

BMatrix b_matrix(const NumericalSemigroup& S);

// Which Kunz cone inequalities a_i + a_j >= a_{i+j} are tight. Pairs with
// i + j divisible by m carry no inequality and never appear.
struct FaceSignature {
  unsigned long m = 0;
  std::set<std::pair<unsigned long, unsigned long>> tight_pairs;

  friend bool operator==(const FaceSignature&, const FaceSignature&) = default;
};

FaceSignature face_signature(const BMatrix& B);
FaceSignature face_signature(const NumericalSemigroup& S);

// Divisibility order on Apery classes: i precedes j when a_j - a_i is again
// an Apery value, with 0 below everything. The strict relation is stored
// transitively closed.
class KunzPoset {
 public:
  KunzPoset(unsigned long m,
            std::set<std::pair<unsigned long, unsigned long>> strict);

  unsigned long m() const { return m_; }
  bool less(unsigned long i, unsigned long j) const;
  const std::set<std::pair<unsigned long, unsigned long>>& relation() const {
    return strict_;
  }
  // Cover relations, for Hasse diagram rendering.
  std::vector<std::pair<unsigned long, unsigned long>> covers() const;

  friend bool operator==(const KunzPoset&, const KunzPoset&) = default;

 private:
  unsigned long m_;
  std::set<std::pair<unsigned long, unsigned long>> strict_;
};

KunzPoset kunz_poset(const NumericalSemigroup& S);

// True iff S and T lie in the same face of the Kunz cone: equal
// multiplicities and identical tight-pair sets.
bool same_face(const NumericalSemigroup& S, const NumericalSemigroup& T);

// Whether a point with coordinates (x_1, ..., x_{m-1}), m = size + 1, is an
// Apery tuple of some multiplicity-m numerical semigroup: congruences
// x_i = i mod m, x_i >= m, and every Kunz inequality with i + j not
// divisible by m.
bool in_cone(const std::vector<Int>& point);

// Index relabeling i -> u*i mod m by a unit u of Z_m; throws Error when
// gcd(u, m) != 1.
FaceSignature relabel(const FaceSignature& sig, unsigned long u);
KunzPoset relabel(const KunzPoset& P, unsigned long u);

}  // namespace nsres
