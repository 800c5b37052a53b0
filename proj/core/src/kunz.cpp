#include "nsres/kunz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nsres {

namespace {

size_t upper_index(unsigned long m, unsigned long i, unsigned long j) {
  // Row-major position of (i,j), 1 <= i <= j <= m-1, in the packed upper
  // triangle whose row i has m-i entries.
  size_t before = 0;
  for (unsigned long r = 1; r < i; ++r) before += m - r;
  return before + (j - i);
}

}  // namespace

BMatrix::BMatrix(const NumericalSemigroup& S) : m_(S.multiplicity()) {
  for (unsigned long i = 1; i < m_; ++i) {
    for (unsigned long j = i; j < m_; ++j) {
      Int num = S.apery_value(i) + S.apery_value(j) - S.apery_value(i + j);
      Int b = div_exact(num, Int(m_));
      if (b < 0)
        throw InternalInvariantError("negative b-value; corrupt Apery data");
      entries_.push_back(b);
    }
  }
}

const Int& BMatrix::at(unsigned long i, unsigned long j) const {
  i %= m_;
  j %= m_;
  if (i == 0 || j == 0) return one_;
  if (i > j) std::swap(i, j);
  return entries_[upper_index(m_, i, j)];
}

BMatrix b_matrix(const NumericalSemigroup& S) { return BMatrix(S); }

FaceSignature face_signature(const BMatrix& B) {
  FaceSignature sig;
  sig.m = B.m();
  for (unsigned long i = 1; i < B.m(); ++i)
    for (unsigned long j = i; j < B.m(); ++j) {
      if ((i + j) % B.m() == 0) continue;
      if (B.at(i, j) == 0) sig.tight_pairs.insert({i, j});
    }
  return sig;
}

FaceSignature face_signature(const NumericalSemigroup& S) {
  return face_signature(BMatrix(S));
}

KunzPoset::KunzPoset(unsigned long m,
                     std::set<std::pair<unsigned long, unsigned long>> strict)
    : m_(m), strict_(std::move(strict)) {}

bool KunzPoset::less(unsigned long i, unsigned long j) const {
  return strict_.count({i % m_, j % m_}) > 0;
}

std::vector<std::pair<unsigned long, unsigned long>> KunzPoset::covers()
    const {
  std::vector<std::pair<unsigned long, unsigned long>> out;
  for (const auto& [i, j] : strict_) {
    bool has_middle = false;
    for (unsigned long k = 0; k < m_ && !has_middle; ++k)
      if (less(i, k) && less(k, j)) has_middle = true;
    if (!has_middle) out.push_back({i, j});
  }
  return out;
}

KunzPoset kunz_poset(const NumericalSemigroup& S) {
  unsigned long m = S.multiplicity();
  BMatrix B(S);
  std::set<std::pair<unsigned long, unsigned long>> strict;
  for (unsigned long j = 1; j < m; ++j) strict.insert({0, j});
  for (unsigned long i = 1; i < m; ++i)
    for (unsigned long j = 1; j < m; ++j) {
      if (i == j) continue;
      if (B.at(i, (j + m - i) % m) == 0) strict.insert({i, j});
    }
  return KunzPoset(m, std::move(strict));
}

bool same_face(const NumericalSemigroup& S, const NumericalSemigroup& T) {
  return S.multiplicity() == T.multiplicity() &&
         face_signature(S) == face_signature(T);
}

bool in_cone(const std::vector<Int>& point) {
  unsigned long m = point.size() + 1;
  auto val = [&](unsigned long r) { return point[r - 1]; };
  for (unsigned long i = 1; i < m; ++i) {
    if (val(i) < static_cast<long>(m)) return false;
    if (mod_floor(val(i), Int(m)) != i) return false;
  }
  for (unsigned long i = 1; i < m; ++i)
    for (unsigned long j = i; j < m; ++j) {
      if ((i + j) % m == 0) continue;
      if (val(i) + val(j) < val((i + j) % m)) return false;
    }
  return true;
}

namespace {

unsigned long require_unit(unsigned long u, unsigned long m) {
  u %= m;
  if (std::gcd(u, m) != 1) {
    std::ostringstream msg;
    msg << "relabel: " << u << " is not a unit mod " << m;
    throw Error(msg.str());
  }
  return u;
}

}  // namespace

FaceSignature relabel(const FaceSignature& sig, unsigned long u) {
  u = require_unit(u, sig.m);
  FaceSignature out;
  out.m = sig.m;
  for (const auto& [i, j] : sig.tight_pairs) {
    unsigned long a = (i * u) % sig.m;
    unsigned long b = (j * u) % sig.m;
    if (a > b) std::swap(a, b);
    out.tight_pairs.insert({a, b});
  }
  return out;
}

KunzPoset relabel(const KunzPoset& P, unsigned long u) {
  u = require_unit(u, P.m());
  std::set<std::pair<unsigned long, unsigned long>> strict;
  for (const auto& [i, j] : P.relation())
    strict.insert({(i * u) % P.m(), (j * u) % P.m()});
  return KunzPoset(P.m(), std::move(strict));
}

}  // namespace nsres
