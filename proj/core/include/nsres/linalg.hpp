#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "nsres/errors.hpp"
#include "nsres/numeric.hpp"

namespace nsres {

// Exact rationals. The default field everywhere.
struct QQ {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("QQ: inverse of zero");
    return Rat(1) / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem from_rat(const Rat& r) const { return r; }
};

// Prime field with runtime modulus; a speed option for large rank
// computations. Elements are canonical representatives in [0, p).
class GFp {
 public:
  using Elem = unsigned long;

  // Throws Error unless p is prime and fits comfortably below 2^31 (so
  // products stay inside unsigned long).
  explicit GFp(unsigned long p);

  unsigned long modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  // Reduces num/den mod p; throws Error when p divides the denominator
  // (the rational has no image in characteristic p).
  Elem from_rat(const Rat& r) const;

 private:
  unsigned long p_;
};

bool is_prime(unsigned long n);

// Sparse vector over an abstract index set.
template <class F>
using SparseVec = std::map<size_t, typename F::Elem>;

template <class F>
void axpy(const F& f, SparseVec<F>& acc, const typename F::Elem& c,
          const SparseVec<F>& v) {
  if (f.is_zero(c)) return;
  for (const auto& [i, x] : v) {
    auto [it, inserted] = acc.try_emplace(i, f.mul(c, x));
    if (!inserted) {
      it->second = f.add(it->second, f.mul(c, x));
      if (f.is_zero(it->second)) acc.erase(it);
    }
  }
}

// Incremental row-reduction structure: one stored vector per pivot index,
// leading coefficient normalized to 1. Supports rank and span-membership.
template <class F>
class Echelon {
 public:
  explicit Echelon(F field = F()) : f_(std::move(field)) {}

  // Eliminates every pivot of the stored basis from v, in place. v is in
  // the span iff it comes back empty.
  void reduce(SparseVec<F>& v) const {
    while (!v.empty()) {
      auto lead = v.begin();
      auto hit = rows_.find(lead->first);
      if (hit == rows_.end()) return;
      typename F::Elem c = lead->second;
      axpy(f_, v, f_.neg(c), hit->second);
    }
  }

  // Reduce, then adopt v as a new basis vector if anything is left.
  bool insert(SparseVec<F> v) {
    reduce(v);
    if (v.empty()) return false;
    auto lead = v.begin();
    typename F::Elem scale = f_.inv(lead->second);
    SparseVec<F> normalized;
    for (const auto& [i, x] : v) normalized.emplace(i, f_.mul(scale, x));
    rows_.emplace(normalized.begin()->first, std::move(normalized));
    return true;
  }

  size_t rank() const { return rows_.size(); }

  // Stored basis, keyed by pivot index. Lets callers propagate a span
  // (multiply every basis vector by something and re-insert elsewhere).
  const std::map<size_t, SparseVec<F>>& rows() const { return rows_; }

 private:
  F f_;
  std::map<size_t, SparseVec<F>> rows_;
};

// Feeds matrix columns left to right, tracking for each reduced image the
// combination of original columns that produced it. A column whose image
// reduces to zero hands back that combination: a kernel vector whose
// largest-index entry is the new column with coefficient 1.
template <class F>
class KernelBuilder {
 public:
  explicit KernelBuilder(F field = F()) : f_(std::move(field)) {}

  void add_column(size_t j, SparseVec<F> image) {
    SparseVec<F> companion{{j, f_.one()}};
    for (;;) {
      if (image.empty()) {
        kernel_.push_back(std::move(companion));
        return;
      }
      auto lead = image.begin();
      auto hit = rows_.find(lead->first);
      if (hit == rows_.end()) break;
      typename F::Elem c = lead->second;
      axpy(f_, image, f_.neg(c), hit->second.first);
      axpy(f_, companion, f_.neg(c), hit->second.second);
    }
    typename F::Elem scale = f_.inv(image.begin()->second);
    SparseVec<F> img, comp;
    for (const auto& [i, x] : image) img.emplace(i, f_.mul(scale, x));
    for (const auto& [i, x] : companion) comp.emplace(i, f_.mul(scale, x));
    size_t pivot = img.begin()->first;
    rows_.emplace(pivot, std::make_pair(std::move(img), std::move(comp)));
  }

  const std::vector<SparseVec<F>>& kernel() const { return kernel_; }
  std::vector<SparseVec<F>> take_kernel() { return std::move(kernel_); }
  size_t rank() const { return rows_.size(); }

 private:
  F f_;
  // pivot row index -> (reduced image, companion combination of columns)
  std::map<size_t, std::pair<SparseVec<F>, SparseVec<F>>> rows_;
  std::vector<SparseVec<F>> kernel_;
};

// Rank of a matrix presented as columns.
template <class F>
size_t sparse_rank(const F& f, const std::vector<SparseVec<F>>& columns) {
  KernelBuilder<F> kb(f);
  for (size_t j = 0; j < columns.size(); ++j) kb.add_column(j, columns[j]);
  return kb.rank();
}

// Runtime selection between QQ and GFp, resolved once at the oracle / CLI
// boundary.
struct FieldChoice {
  bool rational = true;
  unsigned long p = 0;

  static FieldChoice rat() { return FieldChoice{}; }
  static FieldChoice fp(unsigned long p) { return FieldChoice{false, p}; }
  // Accepts "rat" or "fp:P"; throws Error otherwise.
  static FieldChoice parse(const std::string& text);
  std::string describe() const;
};

template <class Fn>
auto with_field(const FieldChoice& fc, Fn&& fn) {
  if (fc.rational) return fn(QQ{});
  return fn(GFp(fc.p));
}

}  // namespace nsres
