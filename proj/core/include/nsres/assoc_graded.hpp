#pragma once

#include <map>
#include <string>
#include <vector>

#include "nsres/oracle.hpp"
#include "nsres/ring.hpp"
#include "nsres/semigroup.hpp"

namespace nsres {

// Polynomial in the ambient of the associated graded ring: one variable
// per minimal generator of S, standard grading (every variable in degree
// one), exponent vectors as keys. The associated graded ring of R at its
// maximal ideal is the quotient of this ambient by the initial ideal, the
// ideal of lowest-degree homogeneous components of the defining relations.
using GrPoly = std::map<Monomial, Rat>;

// y for the multiplicity, x_i for the generator congruent to i mod m.
// Minimal generators lie in distinct classes, so the names are unique.
std::vector<std::string> gr_variable_names(const NumericalSemigroup& S);

std::string render(const GrPoly& f, const std::vector<std::string>& names);

// The homogeneous component of least total degree. ZeroPolynomialError on
// the zero polynomial.
GrPoly initial_form(const GrPoly& f);

struct GrPresentation {
  std::vector<unsigned long> generators;  // ambient variables, ascending
  std::vector<std::string> names;
  unsigned long degree_bound = 0;
  // pieces[d] is a basis of the degree-d slice of the initial ideal: a
  // monomial whose value has a longer factorization, or a difference of
  // two monomials with the same value. pieces[0] is empty.
  std::vector<std::vector<GrPoly>> pieces;
  // Minimal generators found in degrees <= degree_bound, ascending degree,
  // each normalized so its least monomial has coefficient +1. Complete
  // only up to the bound; callers needing more pass a larger one.
  std::vector<GrPoly> minimal_generators;
  // hilbert[d] = dim ambient_d - dim pieces[d], the number of semigroup
  // elements whose longest factorization has length exactly d.
  std::vector<unsigned long> hilbert;
};

// Degreewise slices of the initial ideal through degree D >= 1. Each slice
// is the kernel of evaluation onto the d-th power of the maximal ideal
// modulo the next: a degree-d monomial maps to the class of t^n when the
// longest factorization of its value n has length exactly d, and to zero
// when a longer factorization exists.
GrPresentation initial_ideal_truncated(const NumericalSemigroup& S,
                                       unsigned long D);

// hilbert sequence alone, by direct count over the length table.
std::vector<unsigned long> gr_hilbert(const NumericalSemigroup& S,
                                      unsigned long D);

struct QuadraticReport {
  bool quadratic = true;
  // Minimal generators of the initial ideal in degrees 3..D.
  std::vector<GrPoly> certificate;
};

// True when the initial ideal has no minimal generators in degrees 3..D,
// a necessary condition for Koszulness. D >= 3 required.
QuadraticReport is_quadratic(const NumericalSemigroup& S, unsigned long D);

// The associated graded ring as a degreewise algebra over its standard
// grading, usable by the syzygy oracle; arithmetic reduces products
// against the stored slices, valid through degree D.
GradedRingHandle gr_algebra(const NumericalSemigroup& S, unsigned long D);

// Betti table of k over the associated graded ring through step i_max,
// degrees <= D (so 1 <= i_max <= D); graded entries are keyed by
// (step, standard degree). Throws DegreeBoundTooLowError when a minimal
// syzygy generator lands at degree D, since the next step would start
// beyond the window.
BettiTable gr_betti_k(const NumericalSemigroup& S, unsigned long i_max,
                      unsigned long D,
                      const FieldChoice& field = FieldChoice::rat());

// True when beta_{i,j} = 0 for every j != i through the same window: a
// bounded linearity certificate, not a proof of Koszulness.
bool koszul_up_to(const NumericalSemigroup& S, unsigned long i_max,
                  unsigned long D,
                  const FieldChoice& field = FieldChoice::rat());

// Number of minimal generators of the initial ideal in degrees <= D.
unsigned long betti1_Q_gr(const NumericalSemigroup& S, unsigned long D);

}  // namespace nsres
