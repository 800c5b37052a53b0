#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nsres/kunz.hpp"
#include "nsres/semigroup.hpp"

namespace nsres {

// Exponent vector of a monomial. For the ambient ring
// k[y, x_1, ..., x_{m-1}] index 0 is y and index i is x_i; other rings
// (one variable per minimal generator, or the single variable t) reuse the
// same container with their own naming.
struct Monomial {
  std::vector<unsigned long> e;

  static Monomial one(size_t nvars) { return Monomial{std::vector<unsigned long>(nvars, 0)}; }
  static Monomial var(size_t nvars, size_t i, unsigned long power = 1) {
    Monomial m = one(nvars);
    m.e[i] = power;
    return m;
  }
  Monomial times(const Monomial& other) const;
  unsigned long total_degree() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// S-degree with deg y = m and deg x_i = a_i. Throws LengthMismatchError
// unless the exponent vector has one slot per residue class.
Int s_degree(const Monomial& mon, const NumericalSemigroup& S);

// Weighted degree against an arbitrary positive degree vector.
Int weighted_degree(const Monomial& mon, const std::vector<Int>& degrees);

// An element of R = k[S] in the t^n basis: finite support map from degrees
// n in S to nonzero rational coefficients. Equality in R is equality here.
class RingElement {
 public:
  RingElement() = default;
  static RingElement term(const Int& degree, const Rat& coef);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Int, Rat>& terms() const { return terms_; }

  RingElement& add_term(const Int& degree, const Rat& coef);
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement operator-() const;
  RingElement scaled(const Rat& c) const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::map<Int, Rat> terms_;
};

// Image of a formal polynomial under x_i -> t^{a_i}, y -> t^m: monomials
// collapse onto their S-degrees and like terms combine.
RingElement normal_form(const std::vector<std::pair<Rat, Monomial>>& poly,
                        const NumericalSemigroup& S);

// The difference lhs - rhs of two monomials; toric generators are stored
// this way so both sides stay inspectable.
struct Binomial {
  Monomial lhs;
  Monomial rhs;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

// Generators x_i x_j - y^{b_ij} x_{(i+j) mod m} of the defining ideal I_S,
// one per pair 1 <= i <= j <= m-1 in lexicographic order. When i + j is
// divisible by m the target x_0 = y joins the y-power, giving
// x_i x_j - y^{b_ij + 1}.
std::vector<Binomial> toric_generators(const NumericalSemigroup& S);

enum class GradedKind { R, Q, Qmin };

// All exponent vectors with given positive degrees summing to n, in
// ascending lexicographic order.
std::vector<Monomial> graded_monomials(const std::vector<Int>& degrees,
                                       const Int& n);

// Degree vector of the ambient ring for each kind: {1} for R (variable t),
// (m, a_1, ..., a_{m-1}) for Q, the minimal generators for Qmin.
std::vector<Int> variable_degrees(GradedKind kind,
                                  const NumericalSemigroup& S);

// Monomial basis of the degree-n graded piece. For R this is {t^n} when n
// lies in S and empty otherwise.
std::vector<Monomial> graded_basis(GradedKind kind,
                                   const NumericalSemigroup& S, const Int& n);

// Variable names matching variable_degrees(kind, S), for rendering.
std::vector<std::string> variable_names(GradedKind kind,
                                        const NumericalSemigroup& S);

std::string render(const Monomial& mon, const std::vector<std::string>& names);
std::string render(const Binomial& bin, const std::vector<std::string>& names);
std::string render(const RingElement& f);

}  // namespace nsres
