#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsres {

// Arbitrary-precision integers and rationals. Apery values stay small but
// the y-exponents in high homological degree and the series coefficients in
// golod checks grow without bound, so everything arithmetic-critical uses
// these aliases rather than machine words.
using Int = mpz_class;
using Rat = mpq_class;

// Floor residue, always in [0, m). gmp's % follows C semantics for negative
// operands, which is not what modular index arithmetic wants.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline unsigned long mod_floor(long a, unsigned long m) {
  long r = a % static_cast<long>(m);
  if (r < 0) r += static_cast<long>(m);
  return static_cast<unsigned long>(r);
}

// Exact division; throws if the divisor does not divide.
Int div_exact(const Int& a, const Int& b);

// Narrowing helper for container indexing; throws on overflow or negative.
unsigned long to_ulong(const Int& v);

Int binomial(unsigned long n, unsigned long k);

std::string to_string(const Int& v);

}  // namespace nsres
