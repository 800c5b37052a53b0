#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nsres/matrix.hpp"
#include "nsres/parallel.hpp"

namespace nsres {

using Word = std::vector<unsigned long>;

// Basis words of the step-d free module: first letter ranges over all of
// Z_m, later letters over the nonzero residues. Lexicographic order;
// m(m-1)^{d-1} words for d >= 1, the empty word alone for d = 0.
const std::vector<Word>& word_basis(unsigned long m, unsigned long d);

// Sum of Apery values of the letters (letter 0 contributes m).
Int word_degree(const NumericalSemigroup& S, const Word& w);

// The step-d boundary map of the Apery resolution of k over R:
// e_w -> x_{w_d} e_{hat w} + sum_i (-1)^{d-i} y^{b_{w_i w_{i+1}}} e_{tau_i w},
// where tau_i merges letters i, i+1 by addition mod m and targets with a
// zero letter past position 1 are dropped.
DifferentialMatrix apery_differential(const NumericalSemigroup& S,
                                      unsigned long d);

// Same layout with the y-exponents kept as formal b symbols. Valid for
// every multiplicity-m semigroup (face metadata stays empty).
SymbolicMatrix apery_symbolic_differential(unsigned long m, unsigned long d);

// True iff consecutive boundary maps compose to zero through step D.
bool check_complex(const NumericalSemigroup& S, unsigned long D);
bool check_complex(const std::vector<DifferentialMatrix>& chain);

struct BettiTable {
  std::vector<Int> values;  // beta_0 .. beta_D
  unsigned long degree_bound = 0;
  // S-degree truncation, set by computations that slice degreewise.
  std::optional<Int> s_degree_bound;
  // (homological degree, internal degree) -> multiplicity, when available.
  std::map<std::pair<unsigned long, Int>, Int> graded;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// Betti numbers of k over R through homological degree D, read off the
// Apery resolution: tensoring with k keeps only the degree-0 unit entries,
// and beta_d = rank F_d - rank(d_d (x) k) - rank(d_{d+1} (x) k).
BettiTable betti_via_tensor(const NumericalSemigroup& S, unsigned long D,
                            const FieldChoice& field = FieldChoice::rat());

// Same formula applied to an arbitrary chain: chain[i] maps F_{i+1} into
// F_i, and a chain reaching step L yields beta_0 .. beta_{L-1} (the last
// Betti number needs the following map).
BettiTable betti_via_tensor(const std::vector<DifferentialMatrix>& chain,
                            const FieldChoice& field = FieldChoice::rat());

struct HomologyReport {
  unsigned long d = 0;       // homological position inspected
  Int degree_bound = 0;      // S-degrees 0..N were checked
  // S-degree -> homology dimension; exact positions are omitted.
  std::map<Int, unsigned long> nonzero;

  bool exact() const { return nonzero.empty(); }
};

// Homology at F_d of the complex ... -> F_{d+1} -> F_d -> F_{d-1}, sliced
// S-degree by S-degree for n = 0..N. `into` is the map leaving F_d and
// `from` the map entering it.
HomologyReport truncated_homology(const DifferentialMatrix& into,
                                  const DifferentialMatrix& from, const Int& N,
                                  const FieldChoice& field = FieldChoice::rat());

// The same for the Apery resolution of S at position d >= 1.
HomologyReport truncated_homology(const NumericalSemigroup& S, unsigned long d,
                                  const Int& N,
                                  const FieldChoice& field = FieldChoice::rat());

// Dimensions of coker(d_1)_n for n = 0..N; the resolution augments k, so
// the expected report is a single 1 at degree 0.
HomologyReport graded_cokernel(const DifferentialMatrix& d1, const Int& N,
                               const FieldChoice& field = FieldChoice::rat());

// S-degree bound covering all basis degrees through step d+1:
// (d+2) * max(Ap(S)).
Int default_homology_bound(const NumericalSemigroup& S, unsigned long d);

}  // namespace nsres
