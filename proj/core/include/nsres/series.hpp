#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsres/oracle.hpp"
#include "nsres/semigroup.hpp"

namespace nsres {

// Power series truncated at z^bound, exact integer coefficients. All
// arithmetic truncates to the smaller bound of its operands; use padded()
// when a value is an exact polynomial and deserves a longer window.
class TruncatedSeries {
 public:
  TruncatedSeries() : coef_{Int(0)} {}
  // bound = coefficients.size() - 1; rejects an empty vector.
  explicit TruncatedSeries(std::vector<Int> coefficients);

  static TruncatedSeries zero(unsigned long bound);
  static TruncatedSeries one(unsigned long bound);
  static TruncatedSeries z(unsigned long bound);

  unsigned long bound() const { return coef_.size() - 1; }
  const std::vector<Int>& coefficients() const { return coef_; }
  // Strict: i must stay within the bound.
  const Int& operator[](unsigned long i) const;

  // Lower the window (D <= bound).
  TruncatedSeries truncated(unsigned long D) const;
  // Extend the window with zero coefficients: only correct when the series
  // is an exact polynomial, which is the caller's claim to make.
  TruncatedSeries padded(unsigned long D) const;

  bool agrees_through(const TruncatedSeries& other, unsigned long D) const;

  friend TruncatedSeries operator+(const TruncatedSeries&,
                                   const TruncatedSeries&);
  friend TruncatedSeries operator-(const TruncatedSeries&,
                                   const TruncatedSeries&);
  friend TruncatedSeries operator*(const TruncatedSeries&,
                                   const TruncatedSeries&);
  TruncatedSeries scaled(const Int& c) const;

  std::string text() const;

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

 private:
  std::vector<Int> coef_;  // c_0 .. c_bound
};

TruncatedSeries pow(const TruncatedSeries& base, unsigned long e);

// Quotient of integer polynomials whose denominator has constant term +-1,
// so the expansion is integral to any bound.
struct RationalSeries {
  std::vector<Int> num;
  std::vector<Int> den;

  // Validates the constant term and strips trailing zeros.
  RationalSeries(std::vector<Int> numerator, std::vector<Int> denominator);

  TruncatedSeries expand(unsigned long D) const;
  std::string text() const;
};

// (1+z) / (1-(m-1)z): the Poincare series of the residue field when every
// Apery class is a minimal generator; coefficients 1, m, m(m-1), ...
RationalSeries med_poincare(unsigned long m);

// sum_{i=0}^{m-2} (i+1) C(m, i+2) z^i, the Betti polynomial of the
// defining ideal over Q in the maximal embedding dimension case. Exact
// polynomial; satisfies 1 - z^2 * med_PIQ(m) = (1+z)^{m-1} (1-(m-1)z).
TruncatedSeries med_PIQ(unsigned long m);

// Coefficients beta_0..beta_D of the residue-field Poincare series.
// Closed forms cover the maximal embedding dimension case and every
// multiplicity-4 face (each spot-checked against the tensor computation in
// low steps); everything else runs through betti_via_tensor.
TruncatedSeries poincare_truncated(const NumericalSemigroup& S,
                                   unsigned long D,
                                   const FieldChoice& field = FieldChoice::rat());

// The Betti polynomial of the defining ideal over the minimal polynomial
// presentation, from closed forms when available: the maximal embedding
// dimension formula, 1 for two generators (principal ideal), 2 + z and
// 3 + 2z for the two kinds of multiplicity-4 facet. Otherwise computed by
// the syzygy oracle when use_oracle is set, else MissingPIQError.
TruncatedSeries default_piq(const NumericalSemigroup& S,
                            bool use_oracle = true,
                            const FieldChoice& field = FieldChoice::rat());

struct GolodReport {
  unsigned long generators = 0;  // minimal generator count n
  TruncatedSeries piq;           // polynomial P used on the right side
  std::string piq_source;        // where P came from
  TruncatedSeries lhs;           // residue-field Poincare series through z^D
  TruncatedSeries rhs;           // (1+z)^n / (1 - z^2 P) through z^D
  bool equal = false;            // lhs == rhs through z^D
};

// Compares the Poincare series against the extremal right side through
// z^D. Equality through the window is reported as "Golod through D",
// never as a categorical claim; inequality is definitive.
GolodReport golod_report(const NumericalSemigroup& S, unsigned long D,
                         std::optional<TruncatedSeries> piq = std::nullopt,
                         const FieldChoice& field = FieldChoice::rat());

bool golod_check(const NumericalSemigroup& S, unsigned long D,
                 std::optional<TruncatedSeries> piq = std::nullopt,
                 const FieldChoice& field = FieldChoice::rat());

}  // namespace nsres
