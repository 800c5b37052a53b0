#include "nsres/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "nsres/linalg.hpp"
#include "nsres/parallel.hpp"

namespace nsres {

namespace {

// Monomial-basis algebra: covers R (t-basis), the two S-graded polynomial
// presentations, and the standard-graded polynomial ring. Degree tables
// are cached; see the threading contract on GradedAlgebra.
class MonomialAlgebra final : public GradedAlgebra {
 public:
  MonomialAlgebra(std::string name,
                  std::function<std::vector<Monomial>(const Int&)> basis,
                  std::vector<std::string> names,
                  std::vector<std::pair<Int, Monomial>> gens)
      : name_(std::move(name)),
        basis_(std::move(basis)),
        names_(std::move(names)),
        gens_(std::move(gens)) {}

  std::string name() const override { return name_; }

  unsigned long dim(const Int& n) const override {
    return static_cast<unsigned long>(table(n).mons.size());
  }

  std::string basis_text(const Int& n, unsigned long i) const override {
    return render(table(n).mons.at(i), names_);
  }

  std::vector<std::pair<Int, unsigned long>> algebra_generators()
      const override {
    std::vector<std::pair<Int, unsigned long>> out;
    out.reserve(gens_.size());
    for (const auto& [deg, mon] : gens_) out.emplace_back(deg, index_of(deg, mon));
    return out;
  }

  std::map<unsigned long, Rat> multiply(const Int& c, unsigned long i,
                                        const Int& n,
                                        unsigned long j) const override {
    Monomial prod = table(c).mons.at(i).times(table(n).mons.at(j));
    return {{index_of(c + n, prod), Rat(1)}};
  }

 private:
  struct Table {
    std::vector<Monomial> mons;
    std::map<Monomial, unsigned long> index;
  };

  const Table& table(const Int& n) const {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    Table t;
    t.mons = basis_(n);
    for (unsigned long i = 0; i < t.mons.size(); ++i)
      t.index.emplace(t.mons[i], i);
    return cache_.emplace(n, std::move(t)).first->second;
  }

  unsigned long index_of(const Int& n, const Monomial& m) const {
    const Table& t = table(n);
    auto it = t.index.find(m);
    if (it == t.index.end())
      throw InternalInvariantError(name_ + ": monomial missing from its degree table");
    return it->second;
  }

  std::string name_;
  std::function<std::vector<Monomial>(const Int&)> basis_;
  std::vector<std::string> names_;
  std::vector<std::pair<Int, Monomial>> gens_;
  mutable std::map<Int, Table> cache_;
};

std::shared_ptr<const GradedAlgebra> monomial_kind(GradedKind kind,
                                                   const NumericalSemigroup& S) {
  std::vector<std::pair<Int, Monomial>> gens;
  std::string prefix;
  switch (kind) {
    case GradedKind::R: {
      prefix = "R over ";
      for (unsigned long g : S.minimal_generators())
        gens.emplace_back(Int(g), Monomial{{g}});
      break;
    }
    case GradedKind::Q: {
      prefix = "Q over ";
      auto degs = variable_degrees(GradedKind::Q, S);
      for (size_t i = 0; i < degs.size(); ++i)
        gens.emplace_back(degs[i], Monomial::var(degs.size(), i));
      break;
    }
    case GradedKind::Qmin: {
      prefix = "Qmin over ";
      auto degs = variable_degrees(GradedKind::Qmin, S);
      for (size_t i = 0; i < degs.size(); ++i)
        gens.emplace_back(degs[i], Monomial::var(degs.size(), i));
      break;
    }
  }
  return std::make_shared<MonomialAlgebra>(
      prefix + to_string(S),
      [kind, S](const Int& n) { return graded_basis(kind, S, n); },
      variable_names(kind, S), std::move(gens));
}

Rat lift(const QQ&, const Rat& e) { return e; }
Rat lift(const GFp&, unsigned long e) { return Rat(e); }

template <class F>
void accumulate(const F& f, SparseVec<F>& acc, size_t key,
                const typename F::Elem& e) {
  if (f.is_zero(e)) return;
  auto [it, inserted] = acc.try_emplace(key, e);
  if (!inserted) {
    it->second = f.add(it->second, e);
    if (f.is_zero(it->second)) acc.erase(it);
  }
}

// Flat indexing of the degree-n piece of a free module with generator
// degree list D: generator j contributes dim(n - D[j]) consecutive slots.
struct Layout {
  std::vector<size_t> offset;
  std::vector<unsigned long> dims;
  size_t total = 0;
};

Layout layout_of(const GradedAlgebra& A, const std::vector<Int>& D,
                 const Int& n) {
  Layout L;
  L.offset.resize(D.size());
  L.dims.resize(D.size());
  for (size_t j = 0; j < D.size(); ++j) {
    L.offset[j] = L.total;
    Int c = n - D[j];
    L.dims[j] = (c < 0) ? 0 : A.dim(c);
    L.total += L.dims[j];
  }
  return L;
}

size_t generator_of(const Layout& L, size_t flat) {
  size_t j = static_cast<size_t>(
      std::upper_bound(L.offset.begin(), L.offset.end(), flat) -
      L.offset.begin());
  return j - 1;
}

template <class F>
GradedResolution run_resolution(const F& f, const GradedAlgebra& A,
                                const DegreewiseSpan& span,
                                unsigned long i_max, const Int& N) {
  if (N < 0) throw Error("resolve: negative degree bound");
  // Populate every degree table from one thread before any parallel use.
  for (Int n = 0; n <= N; ++n) A.dim(n);
  if (A.dim(0) != 1)
    throw Error(A.name() + ": not connected in degree zero");
  const auto vars = A.algebra_generators();
  if (vars.empty()) throw Error(A.name() + ": no positive-degree generators");
  Int min_var = vars.front().first;
  for (const auto& [d, b] : vars) min_var = std::min(min_var, d);

  GradedResolution out;
  out.betti.degree_bound = i_max;
  out.betti.s_degree_bound = N;
  const std::vector<Int> ambient{Int(0)};

  for (unsigned long step = 0; step <= i_max; ++step) {
    const std::vector<Int>& host =
        step == 0 ? ambient : out.steps[step - 1].degrees;

    // Kernel vectors per degree, over the flat basis of `host`.
    std::map<Int, std::vector<SparseVec<F>>> kernels;
    if (step == 0) {
      for (Int n = 0; n <= N; ++n) {
        auto given = span(n);
        if (given.empty()) continue;
        if (n == 0)
          throw InternalInvariantError("resolve: submodule meets degree zero");
        std::vector<SparseVec<F>> vecs;
        for (const auto& v : given) {
          SparseVec<F> w;
          for (const auto& [b, c] : v) accumulate(f, w, b, f.from_rat(c));
          if (!w.empty()) vecs.push_back(std::move(w));
        }
        if (!vecs.empty()) kernels.emplace(n, std::move(vecs));
      }
    } else {
      const ResolutionStep& src = out.steps[step - 1];
      const std::vector<Int>& dst =
          step == 1 ? ambient : out.steps[step - 2].degrees;
      std::vector<Int> degrees;
      for (Int n = 0; n <= N; ++n)
        if (layout_of(A, src.degrees, n).total > 0) degrees.push_back(n);
      std::vector<std::vector<SparseVec<F>>> buckets(degrees.size());
      parallel_for(degrees.size(), [&](size_t t) {
        const Int& n = degrees[t];
        Layout srcL = layout_of(A, src.degrees, n);
        Layout dstL = layout_of(A, dst, n);
        KernelBuilder<F> kb(f);
        for (size_t j = 0; j < src.degrees.size(); ++j) {
          Int c = n - src.degrees[j];
          for (unsigned long b = 0; b < srcL.dims[j]; ++b) {
            SparseVec<F> image;
            for (const auto& [key, coef] : src.columns[j]) {
              const auto& [jp, bp] = key;
              auto prods = A.multiply(c, b, src.degrees[j] - dst[jp], bp);
              for (const auto& [b2, r] : prods)
                accumulate(f, image, dstL.offset[jp] + b2,
                           f.mul(f.from_rat(coef), f.from_rat(r)));
            }
            kb.add_column(srcL.offset[j] + b, std::move(image));
          }
        }
        buckets[t] = kb.take_kernel();
      });
      for (size_t t = 0; t < degrees.size(); ++t)
        if (!buckets[t].empty())
          kernels.emplace(degrees[t], std::move(buckets[t]));
    }

    // Nakayama sweep: ascending degrees; a kernel vector is a new minimal
    // generator iff it is independent of (irrelevant ideal) * (chosen).
    ResolutionStep cur;
    std::map<Int, Echelon<F>> grown;
    for (Int n = 0; n <= N; ++n) {
      Layout L = layout_of(A, host, n);
      if (L.total == 0) continue;
      Echelon<F> E(f);
      for (const auto& [dv, bv] : vars) {
        Int low = n - dv;
        auto git = grown.find(low);
        if (git == grown.end()) continue;
        Layout Llow = layout_of(A, host, low);
        for (const auto& [pivot, w] : git->second.rows()) {
          SparseVec<F> lifted;
          for (const auto& [flat, c] : w) {
            size_t j = generator_of(Llow, flat);
            auto prods =
                A.multiply(dv, bv, low - host[j], flat - Llow.offset[j]);
            for (const auto& [b2, r] : prods)
              accumulate(f, lifted, L.offset[j] + b2, f.mul(c, f.from_rat(r)));
          }
          E.insert(std::move(lifted));
        }
      }
      auto kit = kernels.find(n);
      if (kit != kernels.end()) {
        for (SparseVec<F>& v : kit->second) {
          if (!E.insert(v)) continue;
          for (const auto& [flat, c] : v)
            if (host[generator_of(L, flat)] == n)
              throw InternalInvariantError(
                  "resolve: generator with a unit entry; previous step was "
                  "not minimal");
          if (n + min_var > N) {
            std::ostringstream os;
            os << "resolve over " << A.name() << ": step " << step
               << " has a generator in degree " << to_string(n)
               << ", within one generator of the bound " << to_string(N)
               << "; raise the degree bound";
            throw DegreeBoundTooLowError(os.str());
          }
          cur.degrees.push_back(n);
          std::map<std::pair<size_t, unsigned long>, Rat> col;
          for (const auto& [flat, c] : v) {
            size_t j = generator_of(L, flat);
            col.emplace(std::make_pair(j, static_cast<unsigned long>(
                                              flat - L.offset[j])),
                        lift(f, c));
          }
          cur.columns.push_back(std::move(col));
          out.betti.graded[{step, n}] += 1;
        }
      }
      if (E.rank() > 0) grown.emplace(n, std::move(E));
    }
    out.betti.values.push_back(
        Int(static_cast<unsigned long>(cur.degrees.size())));
    out.steps.push_back(std::move(cur));
  }
  return out;
}

DegreewiseSpan irrelevant_ideal(const GradedAlgebra& A) {
  return [&A](const Int& n) {
    std::vector<std::map<unsigned long, Rat>> out;
    if (n <= 0) return out;
    unsigned long d = A.dim(n);
    out.reserve(d);
    for (unsigned long b = 0; b < d; ++b)
      out.push_back({{b, Rat(1)}});
    return out;
  };
}

}  // namespace

GradedRingHandle GradedRingHandle::semigroup_algebra(
    const NumericalSemigroup& S) {
  return GradedRingHandle(monomial_kind(GradedKind::R, S));
}

GradedRingHandle GradedRingHandle::apery_polynomial(
    const NumericalSemigroup& S) {
  return GradedRingHandle(monomial_kind(GradedKind::Q, S));
}

GradedRingHandle GradedRingHandle::minimal_polynomial(
    const NumericalSemigroup& S) {
  return GradedRingHandle(monomial_kind(GradedKind::Qmin, S));
}

GradedRingHandle GradedRingHandle::standard_polynomial(unsigned long nvars) {
  std::vector<Int> degs(nvars, Int(1));
  std::vector<std::string> names;
  std::vector<std::pair<Int, Monomial>> gens;
  names.reserve(nvars);
  for (unsigned long i = 0; i < nvars; ++i) {
    names.push_back("x_" + std::to_string(i + 1));
    gens.emplace_back(Int(1), Monomial::var(nvars, i));
  }
  std::ostringstream os;
  os << "k[" << nvars << " variables]";
  return GradedRingHandle(std::make_shared<MonomialAlgebra>(
      os.str(),
      [degs](const Int& n) { return graded_monomials(degs, n); },
      std::move(names), std::move(gens)));
}

GradedRingHandle GradedRingHandle::custom(
    std::shared_ptr<const GradedAlgebra> impl) {
  return GradedRingHandle(std::move(impl));
}

GradedResolution resolve_submodule(const GradedRingHandle& ring,
                                   const DegreewiseSpan& span,
                                   unsigned long i_max, const Int& N,
                                   const FieldChoice& field) {
  return with_field(field, [&](auto f) {
    return run_resolution(f, ring.algebra(), span, i_max, N);
  });
}

GradedResolution resolve_residue_field(const GradedRingHandle& ring,
                                       unsigned long i_max, const Int& N,
                                       const FieldChoice& field) {
  GradedResolution out;
  out.betti.degree_bound = i_max;
  out.betti.s_degree_bound = N;
  out.betti.values.push_back(Int(1));
  out.betti.graded[{0, Int(0)}] = 1;
  out.steps.push_back(ResolutionStep{{Int(0)}, {}});
  if (i_max == 0) return out;
  GradedResolution sub = resolve_submodule(
      ring, irrelevant_ideal(ring.algebra()), i_max - 1, N, field);
  for (auto& step : sub.steps) out.steps.push_back(std::move(step));
  for (const Int& v : sub.betti.values) out.betti.values.push_back(v);
  for (const auto& [key, mult] : sub.betti.graded)
    out.betti.graded[{key.first + 1, key.second}] = mult;
  return out;
}

GradedResolution resolve_defining_ideal(const NumericalSemigroup& S,
                                        GradedKind kind, unsigned long i_max,
                                        const Int& N,
                                        const FieldChoice& field) {
  if (kind == GradedKind::R)
    throw Error("resolve_defining_ideal: pick a polynomial presentation");
  GradedRingHandle ring = kind == GradedKind::Q
                              ? GradedRingHandle::apery_polynomial(S)
                              : GradedRingHandle::minimal_polynomial(S);
  const GradedAlgebra& A = ring.algebra();
  DegreewiseSpan span = [&A](const Int& n) {
    std::vector<std::map<unsigned long, Rat>> out;
    if (n <= 0) return out;
    unsigned long d = A.dim(n);
    for (unsigned long b = 1; b < d; ++b)
      out.push_back({{0, Rat(1)}, {b, Rat(-1)}});
    return out;
  };
  return resolve_submodule(ring, span, i_max, N, field);
}

BettiTable oracle_betti_k(const NumericalSemigroup& S, unsigned long i_max,
                          const FieldChoice& field) {
  return resolve_residue_field(GradedRingHandle::semigroup_algebra(S), i_max,
                               default_k_bound(S, i_max), field)
      .betti;
}

BettiTable oracle_betti_ideal(const NumericalSemigroup& S, GradedKind kind,
                              unsigned long i_max, const FieldChoice& field) {
  return resolve_defining_ideal(S, kind, i_max, default_ideal_bound(S), field)
      .betti;
}

Int default_k_bound(const NumericalSemigroup& S, unsigned long i_max) {
  Int top = S.apery_value(0ul);
  for (unsigned long i = 1; i < S.multiplicity(); ++i)
    top = std::max(top, S.apery_value(i));
  return Int(i_max + 1) * top;
}

Int default_ideal_bound(const NumericalSemigroup& S) {
  Int total = 0;
  unsigned long m = S.multiplicity();
  for (unsigned long i = 1; i < m; ++i)
    for (unsigned long j = i; j < m; ++j)
      total += S.apery_value(i) + S.apery_value(j);
  Int top = 0;
  for (unsigned long g : S.minimal_generators()) top = std::max(top, Int(g));
  return total + top;
}

}  // namespace nsres
