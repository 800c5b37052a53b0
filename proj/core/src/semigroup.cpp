#include "nsres/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nsres {

NumericalSemigroup NumericalSemigroup::from_generators(
    std::vector<unsigned long> gens) {
  gens.erase(std::remove(gens.begin(), gens.end(), 0ul), gens.end());
  if (gens.empty())
    throw GcdNotOneError("no positive generators given");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  unsigned long g = 0;
  for (unsigned long x : gens) g = std::gcd(g, x);
  if (g != 1) {
    std::ostringstream msg;
    msg << "generators have gcd " << g << ", not 1";
    throw GcdNotOneError(msg.str());
  }

  NumericalSemigroup S;
  S.gens_ = std::move(gens);
  S.m_ = S.gens_.front();

  // Minimal element of each nonzero residue class mod m, by relaxation on
  // the cyclic group. The class-0 source is 0; adding any generator to a
  // known class minimum gives a candidate for the target class.
  unsigned long m = S.m_;
  std::vector<Int> best(m, Int(-1));
  best[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (unsigned long r = 0; r < m; ++r) {
      if (best[r] < 0) continue;
      for (unsigned long gen : S.gens_) {
        unsigned long t = (r + gen % m) % m;
        Int cand = best[r] + gen;
        if (best[t] < 0 || cand < best[t]) {
          best[t] = cand;
          changed = true;
        }
      }
    }
  }
  for (unsigned long r = 1; r < m; ++r) {
    if (best[r] < 0)
      throw InternalInvariantError("apery relaxation left a class empty");
    S.tail_.push_back(best[r]);
  }
  return S;
}

Int NumericalSemigroup::apery_value(const Int& i) const {
  return apery_value(to_ulong(mod_floor(i, Int(m_))));
}

Int NumericalSemigroup::apery_value(unsigned long i) const {
  unsigned long r = i % m_;
  if (r == 0) return Int(m_);
  return tail_[r - 1];
}

Int NumericalSemigroup::frobenius() const {
  if (m_ == 1) return Int(-1);
  Int mx = 0;
  for (const Int& a : tail_) mx = std::max(mx, a);
  return mx - static_cast<long>(m_);
}

bool NumericalSemigroup::contains(const Int& n) const {
  if (n < 0) return false;
  unsigned long r = to_ulong(mod_floor(n, Int(m_)));
  if (r == 0) return true;
  return n >= tail_[r - 1];
}

std::vector<unsigned long> NumericalSemigroup::minimal_generators() const {
  std::vector<unsigned long> out{m_};
  // a_i is a minimal generator unless it splits as a_j + a_l with both
  // summands in the tail; no split can involve the class-0 part since that
  // would force a_i >= m + a_i.
  for (unsigned long i = 1; i < m_; ++i) {
    bool splits = false;
    for (unsigned long j = 1; j < m_ && !splits; ++j) {
      unsigned long l = (i + m_ - j) % m_;
      if (l == 0) continue;
      if (tail_[i - 1] == tail_[j - 1] + tail_[l - 1]) splits = true;
    }
    if (!splits) out.push_back(to_ulong(tail_[i - 1]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool NumericalSemigroup::is_med() const {
  return minimal_generators().size() == m_;
}

std::vector<long> NumericalSemigroup::max_length_table(
    unsigned long bound) const {
  std::vector<unsigned long> mingens = minimal_generators();
  std::vector<long> L(bound + 1, -1);
  L[0] = 0;
  for (unsigned long n = 1; n <= bound; ++n) {
    for (unsigned long g : mingens) {
      if (g > n || L[n - g] < 0) continue;
      L[n] = std::max(L[n], L[n - g] + 1);
    }
  }
  return L;
}

long NumericalSemigroup::max_factorization_length(const Int& n) const {
  if (n < 0 || !contains(n)) return -1;
  unsigned long nn = to_ulong(n);
  return max_length_table(nn)[nn];
}

std::vector<Int> apery_set(const NumericalSemigroup& S) {
  std::vector<Int> out{0};
  for (const Int& a : S.apery_tail()) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const NumericalSemigroup& S) {
  std::ostringstream os;
  os << "<";
  const auto& g = S.generators();
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) os << ",";
    os << g[i];
  }
  os << ">";
  return os.str();
}

}  // namespace nsres
