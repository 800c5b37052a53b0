#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsres/kunz.hpp"
#include "nsres/linalg.hpp"
#include "nsres/ring.hpp"
#include "nsres/semigroup.hpp"

namespace nsres {

// Label of one free-module basis element. Word labels carry resolution
// letters, Multiset labels the sorted multisets of the complete
// intersection complex, Generator labels the numbered generators produced
// by the generic resolution oracle.
enum class LabelKind { Word, Multiset, Generator };

struct GenLabel {
  LabelKind kind = LabelKind::Word;
  std::vector<unsigned long> data;
  Int degree = 0;

  std::string text() const;
  friend auto operator<=>(const GenLabel&, const GenLabel&) = default;
};

GenLabel word_label(std::vector<unsigned long> letters, Int degree);
GenLabel multiset_label(std::vector<unsigned long> letters, Int degree);
GenLabel generator_label(unsigned long index, Int degree);

// One S-graded map of free R-modules. Homogeneity pins each entry to the
// single monomial t^{deg(source col) - deg(target row)}, so entries store
// only coefficients; the degree is recovered from the labels.
class DifferentialMatrix {
 public:
  DifferentialMatrix(NumericalSemigroup S, std::vector<GenLabel> target,
                     std::vector<GenLabel> source);

  const NumericalSemigroup& semigroup() const { return S_; }
  const std::vector<GenLabel>& target() const { return target_; }
  const std::vector<GenLabel>& source() const { return source_; }

  Int entry_degree(size_t row, size_t col) const;

  // Accumulates coef at (row, col). Rejects (InternalInvariantError) any
  // nonzero coefficient whose implied degree is negative or outside S,
  // since no such element of R exists.
  void add_term(size_t row, size_t col, const Rat& coef);

  // nullptr when the entry is zero.
  const Rat* entry(size_t row, size_t col) const;
  RingElement entry_element(size_t row, size_t col) const;

  const std::map<std::pair<size_t, size_t>, Rat>& entries() const {
    return entries_;
  }

  bool is_zero() const { return entries_.empty(); }

  // True when some nonzero entry has degree 0, i.e. the map fails
  // minimality (a unit of R appears).
  bool has_unit_entry() const;

  friend bool operator==(const DifferentialMatrix& a,
                         const DifferentialMatrix& b) {
    return a.S_ == b.S_ && a.target_ == b.target_ &&
           a.source_ == b.source_ && a.entries_ == b.entries_;
  }

 private:
  NumericalSemigroup S_;
  std::vector<GenLabel> target_;
  std::vector<GenLabel> source_;
  std::map<std::pair<size_t, size_t>, Rat> entries_;
};

// A then B: the composite A*B of maps written as matrices (A's source basis
// must equal B's target basis).
DifferentialMatrix compose(const DifferentialMatrix& A,
                           const DifferentialMatrix& B);

// Columns of the residue-field matrix M (x) k: only degree-0 entries
// survive.
template <class F>
std::vector<SparseVec<F>> residue_columns(const F& f,
                                          const DifferentialMatrix& M) {
  std::vector<SparseVec<F>> cols(M.source().size());
  for (const auto& [pos, c] : M.entries())
    if (M.entry_degree(pos.first, pos.second) == 0)
      cols[pos.second].emplace(pos.first, f.from_rat(c));
  return cols;
}

// Positions of the basis elements contributing to S-degree n: those whose
// generator degree can be topped up by an element of R, i.e. n - deg in S.
std::vector<size_t> alive_in_degree(const std::vector<GenLabel>& basis,
                                    const NumericalSemigroup& S, const Int& n);

// The degree-n slice of M as a field matrix: column j is the image of
// src_alive[j], with rows indexed by positions into tgt_alive.
template <class F>
std::vector<SparseVec<F>> slice_columns(const F& f,
                                        const DifferentialMatrix& M,
                                        const std::vector<size_t>& tgt_alive,
                                        const std::vector<size_t>& src_alive) {
  std::map<size_t, size_t> tgt_pos;
  for (size_t i = 0; i < tgt_alive.size(); ++i) tgt_pos.emplace(tgt_alive[i], i);
  std::vector<SparseVec<F>> cols(src_alive.size());
  for (size_t j = 0; j < src_alive.size(); ++j) {
    size_t col = src_alive[j];
    for (size_t row = 0; row < M.target().size(); ++row) {
      const Rat* c = M.entry(row, col);
      if (!c) continue;
      auto it = tgt_pos.find(row);
      if (it == tgt_pos.end())
        throw InternalInvariantError(
            "slice: entry hits a target basis element outside the degree");
      cols[j].emplace(it->second, f.from_rat(*c));
    }
  }
  return cols;
}

// Formal y-exponent: a nonnegative combination of b_ij symbols plus a
// constant.
struct SymbolicExponent {
  std::map<std::pair<unsigned long, unsigned long>, unsigned long> b;
  Int constant = 0;

  bool is_zero() const { return b.empty() && constant == 0; }
  SymbolicExponent plus(const SymbolicExponent& other) const;
  // Value after substituting a concrete b-matrix.
  Int eval(const BMatrix& B) const;
  std::string text() const;

  friend bool operator==(const SymbolicExponent&,
                         const SymbolicExponent&) = default;
};

SymbolicExponent b_symbol(unsigned long i, unsigned long j);
SymbolicExponent constant_exponent(const Int& c);

// One signed monomial entry coef * y^{yexp} * prod x_i^{xexp[i]}.
// xexp[0] (the y slot) stays zero; the y power lives in yexp.
struct SymbolicTerm {
  Rat coef = 0;
  std::vector<unsigned long> xexp;
  SymbolicExponent yexp;

  std::string text() const;
  friend bool operator==(const SymbolicTerm&, const SymbolicTerm&) = default;
};

// Matrix of symbolic entries, valid uniformly across one face of the Kunz
// cone. Labels carry degree 0 (degrees depend on the semigroup chosen).
// face records which face a minimized matrix was built for; matrices valid
// for every multiplicity-m semigroup leave it empty.
struct SymbolicMatrix {
  unsigned long m = 0;
  std::optional<FaceSignature> face;
  std::vector<GenLabel> target;
  std::vector<GenLabel> source;
  std::map<std::pair<size_t, size_t>, SymbolicTerm> entries;

  friend bool operator==(const SymbolicMatrix&, const SymbolicMatrix&) =
      default;
};

// Instantiates the symbolic matrix at T. Label degrees become sums of
// Apery values of the letters; every substituted entry must then be
// S-homogeneous, and a violation throws FaceMismatchError (it means T does
// not lie in the face the matrix was minimized for).
DifferentialMatrix substitute(const SymbolicMatrix& M,
                              const NumericalSemigroup& T);

}  // namespace nsres
