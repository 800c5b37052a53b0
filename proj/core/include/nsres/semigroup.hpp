#pragma once

#include <vector>

#include "nsres/errors.hpp"
#include "nsres/numeric.hpp"

namespace nsres {

// A numerical semigroup: the set of nonnegative integer combinations of a
// finite generating set with gcd 1. The Apery tail with respect to the
// multiplicity m is the workhorse; nearly everything downstream is phrased
// in terms of it.
class NumericalSemigroup {
 public:
  // Accepts any positive generators (duplicates and redundant generators are
  // fine); throws GcdNotOneError unless their gcd is 1.
  static NumericalSemigroup from_generators(std::vector<unsigned long> gens);

  // Sorted, deduplicated input generators.
  const std::vector<unsigned long>& generators() const { return gens_; }

  unsigned long multiplicity() const { return m_; }

  // a_1..a_{m-1} where a_i is the least element of S congruent to i mod m.
  const std::vector<Int>& apery_tail() const { return tail_; }

  // a_{i mod m}, with the class-0 value taken to be m rather than 0. The
  // resolution and Kunz-coordinate formulas all want this convention: it
  // makes deg x_0 = deg y and keeps the b-values uniform across classes.
  Int apery_value(const Int& i) const;
  Int apery_value(unsigned long i) const;

  Int frobenius() const;

  bool contains(const Int& n) const;

  std::vector<unsigned long> minimal_generators() const;

  // Maximal embedding dimension: every Apery tail element is a minimal
  // generator, i.e. the semigroup needs all m of its canonical generators.
  bool is_med() const;

  // Table of maximal factorization lengths over the minimal generators:
  // entry n is the largest number of parts in any expression of n as a sum
  // of minimal generators, or -1 when n is a gap. Size bound+1.
  std::vector<long> max_length_table(unsigned long bound) const;

  long max_factorization_length(const Int& n) const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.m_ == b.m_ && a.tail_ == b.tail_;
  }

 private:
  NumericalSemigroup() = default;

  std::vector<unsigned long> gens_;
  unsigned long m_ = 0;
  std::vector<Int> tail_;
};

// Classical Apery set {0, a_1, ..., a_{m-1}} as a sorted vector.
std::vector<Int> apery_set(const NumericalSemigroup& S);

std::string to_string(const NumericalSemigroup& S);

}  // namespace nsres
