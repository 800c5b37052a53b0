#include "nsres/numeric.hpp"

namespace nsres {

Int div_exact(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("div_exact: division by zero");
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw std::invalid_argument("div_exact: " + to_string(b) +
                                " does not divide " + to_string(a));
  return q;
}

unsigned long to_ulong(const Int& v) {
  if (v < 0 || !v.fits_ulong_p())
    throw std::overflow_error("to_ulong: value out of range: " + to_string(v));
  return v.get_ui();
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace nsres
