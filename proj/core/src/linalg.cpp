#include "nsres/linalg.hpp"

#include <sstream>
#include <string>

namespace nsres {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GFp::GFp(unsigned long p) : p_(p) {
  if (p >= (1ul << 31))
    throw Error("GFp: modulus too large (must be below 2^31)");
  if (!is_prime(p))
    throw Error("GFp: modulus " + std::to_string(p) + " is not prime");
}

GFp::Elem GFp::inv(Elem a) const {
  a %= p_;
  if (a == 0) throw Error("GFp: inverse of zero");
  // Extended Euclid on (a, p).
  long r0 = static_cast<long>(p_), r1 = static_cast<long>(a);
  long s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  long s = s0 % static_cast<long>(p_);
  if (s < 0) s += static_cast<long>(p_);
  return static_cast<Elem>(s);
}

GFp::Elem GFp::from_rat(const Rat& r) const {
  unsigned long den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p_);
  if (den == 0)
    throw Error("GFp: denominator divisible by the characteristic");
  unsigned long num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p_);
  return mul(num, inv(den));
}

FieldChoice FieldChoice::parse(const std::string& text) {
  if (text == "rat") return rat();
  if (text.rfind("fp:", 0) == 0) {
    try {
      size_t used = 0;
      unsigned long p = std::stoul(text.substr(3), &used);
      if (used == text.size() - 3) return fp(p);
    } catch (const std::exception&) {
    }
  }
  throw Error("unrecognized field '" + text + "' (expected rat or fp:P)");
}

std::string FieldChoice::describe() const {
  if (rational) return "rat";
  std::ostringstream os;
  os << "fp:" << p;
  return os.str();
}

}  // namespace nsres
