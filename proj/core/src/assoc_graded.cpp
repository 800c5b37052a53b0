#include "nsres/assoc_graded.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <utility>

#include "nsres/errors.hpp"
#include "nsres/linalg.hpp"
#include "nsres/numeric.hpp"

namespace nsres {

namespace {

Int value_of(const std::vector<unsigned long>& gens, const Monomial& mon) {
  Int n = 0;
  for (size_t i = 0; i < gens.size(); ++i)
    n += Int(gens[i]) * Int(mon.e[i]);
  return n;
}

std::vector<Int> standard_degrees(size_t nvars) {
  return std::vector<Int>(nvars, Int(1));
}

// Eliminates every pivot index of E from v, not only while the lead
// matches: rows carry support only at and above their pivot, so one
// ascending pass leaves a canonical representative on non-pivot indices.
void full_reduce(const Echelon<QQ>& E, SparseVec<QQ>& v) {
  QQ f;
  auto it = v.begin();
  while (it != v.end()) {
    auto hit = E.rows().find(it->first);
    if (hit == E.rows().end()) {
      ++it;
      continue;
    }
    const size_t p = it->first;
    const Rat c = it->second;
    axpy(f, v, f.neg(c), hit->second);
    it = v.upper_bound(p);
  }
}

}  // namespace

std::vector<std::string> gr_variable_names(const NumericalSemigroup& S) {
  std::vector<std::string> names;
  for (unsigned long g : S.minimal_generators()) {
    if (g == S.multiplicity()) {
      names.push_back("y");
    } else {
      names.push_back("x_" + std::to_string(g % S.multiplicity()));
    }
  }
  return names;
}

std::string render(const GrPoly& f, const std::vector<std::string>& names) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mon, coef] : f) {
    Rat c = coef;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const bool constant = mon.total_degree() == 0;
    if (c != 1 || constant) os << c;
    if (!constant) os << render(mon, names);
  }
  return os.str();
}

GrPoly initial_form(const GrPoly& f) {
  if (f.empty())
    throw ZeroPolynomialError("initial_form: the zero polynomial has none");
  unsigned long low = 0;
  bool seen = false;
  for (const auto& [mon, coef] : f) {
    (void)coef;
    const unsigned long d = mon.total_degree();
    if (!seen || d < low) {
      low = d;
      seen = true;
    }
  }
  GrPoly out;
  for (const auto& [mon, coef] : f)
    if (mon.total_degree() == low) out.emplace(mon, coef);
  return out;
}

GrPresentation initial_ideal_truncated(const NumericalSemigroup& S,
                                       unsigned long D) {
  if (D < 1) throw Error("initial_ideal_truncated: degree bound must be >= 1");
  GrPresentation out;
  out.generators = S.minimal_generators();
  out.names = gr_variable_names(S);
  out.degree_bound = D;
  out.pieces.resize(D + 1);
  out.hilbert.assign(D + 1, 0);
  out.hilbert[0] = 1;

  const size_t nvars = out.generators.size();
  const unsigned long max_gen = out.generators.back();
  const std::vector<long> length = S.max_length_table(D * max_gen);
  const std::vector<Int> degs = standard_degrees(nvars);

  std::vector<std::vector<Monomial>> mons(D + 1);
  std::vector<std::map<Monomial, size_t>> index(D + 1);
  for (unsigned long d = 0; d <= D; ++d) {
    mons[d] = graded_monomials(degs, Int(d));
    for (size_t i = 0; i < mons[d].size(); ++i) index[d].emplace(mons[d][i], i);
  }

  for (unsigned long d = 1; d <= D; ++d) {
    // Anchor of each value class: the least monomial attaining it.
    std::map<Int, size_t> anchor;
    for (size_t i = 0; i < mons[d].size(); ++i) {
      const Int n = value_of(out.generators, mons[d][i]);
      const long L = length[to_ulong(n)];
      if (L < static_cast<long>(d))
        throw InternalInvariantError(
            "initial_ideal_truncated: a monomial is a factorization longer "
            "than the longest one recorded");
      if (L > static_cast<long>(d)) {
        out.pieces[d].push_back(GrPoly{{mons[d][i], Rat(1)}});
        continue;
      }
      auto [it, fresh] = anchor.emplace(n, i);
      if (fresh) continue;
      out.pieces[d].push_back(GrPoly{{mons[d][it->second], Rat(1)},
                                     {mons[d][i], Rat(-1)}});
    }
    out.hilbert[d] = mons[d].size() - out.pieces[d].size();

    // New minimal generators: slice vectors surviving reduction against
    // variable multiples of the previous slice.
    Echelon<QQ> E;
    for (size_t v = 0; v < nvars; ++v) {
      for (const GrPoly& b : out.pieces[d - 1]) {
        SparseVec<QQ> vec;
        for (const auto& [mon, coef] : b)
          vec.emplace(index[d].at(mon.times(Monomial::var(nvars, v))), coef);
        E.insert(std::move(vec));
      }
    }
    for (const GrPoly& b : out.pieces[d]) {
      SparseVec<QQ> vec;
      for (const auto& [mon, coef] : b) vec.emplace(index[d].at(mon), coef);
      if (!E.insert(std::move(vec))) continue;
      GrPoly gen = b;
      const Rat lead = gen.begin()->second;
      if (lead != 1)
        for (auto& [mon, coef] : gen) coef /= lead;
      out.minimal_generators.push_back(std::move(gen));
    }
    if (E.rank() != out.pieces[d].size())
      throw InternalInvariantError(
          "initial_ideal_truncated: slice basis does not span the variable "
          "multiples of the previous slice");
  }
  return out;
}

std::vector<unsigned long> gr_hilbert(const NumericalSemigroup& S,
                                      unsigned long D) {
  const std::vector<unsigned long> gens = S.minimal_generators();
  const unsigned long max_gen = gens.back();
  const std::vector<long> length = S.max_length_table(D * max_gen);
  std::vector<unsigned long> H(D + 1, 0);
  for (unsigned long n = 0; n < length.size(); ++n) {
    const long L = length[n];
    if (L >= 0 && L <= static_cast<long>(D)) ++H[L];
  }
  return H;
}

QuadraticReport is_quadratic(const NumericalSemigroup& S, unsigned long D) {
  if (D < 3) throw Error("is_quadratic: degree bound must be >= 3");
  QuadraticReport rep;
  for (GrPoly& g : initial_ideal_truncated(S, D).minimal_generators) {
    if (g.begin()->first.total_degree() < 3) continue;
    rep.quadratic = false;
    rep.certificate.push_back(std::move(g));
  }
  return rep;
}

namespace {

class GrAlgebra final : public GradedAlgebra {
 public:
  GrAlgebra(const NumericalSemigroup& S, unsigned long D)
      : pres_(initial_ideal_truncated(S, D)) {
    const size_t nvars = pres_.generators.size();
    const std::vector<Int> degs = standard_degrees(nvars);
    tables_.resize(D + 1);
    for (unsigned long d = 0; d <= D; ++d) {
      Table& T = tables_[d];
      T.mons = graded_monomials(degs, Int(d));
      for (size_t i = 0; i < T.mons.size(); ++i) T.index.emplace(T.mons[i], i);
      for (const GrPoly& b : pres_.pieces[d]) {
        SparseVec<QQ> vec;
        for (const auto& [mon, coef] : b) vec.emplace(T.index.at(mon), coef);
        T.slice.insert(std::move(vec));
      }
      for (size_t i = 0; i < T.mons.size(); ++i) {
        if (T.slice.rows().count(i)) continue;
        T.coset.emplace(i, T.basis.size());
        T.basis.push_back(i);
      }
      if (T.basis.size() != pres_.hilbert[d])
        throw InternalInvariantError(
            "gr algebra: coset basis disagrees with the hilbert count");
    }
  }

  std::string name() const override {
    std::string s = "gr(k[";
    for (size_t i = 0; i < pres_.generators.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(pres_.generators[i]);
    }
    return s + "])";
  }

  unsigned long dim(const Int& n) const override {
    if (n < 0) return 0;
    return table(n).basis.size();
  }

  std::string basis_text(const Int& n, unsigned long i) const override {
    const Table& T = table(n);
    return render(T.mons[T.basis.at(i)], pres_.names);
  }

  std::vector<std::pair<Int, unsigned long>> algebra_generators()
      const override {
    std::vector<std::pair<Int, unsigned long>> out;
    for (unsigned long i = 0; i < tables_[1].basis.size(); ++i)
      out.emplace_back(Int(1), i);
    return out;
  }

  std::map<unsigned long, Rat> multiply(const Int& c, unsigned long i,
                                        const Int& n,
                                        unsigned long j) const override {
    const Table& A = table(c);
    const Table& B = table(n);
    const Table& T = table(c + n);
    const Monomial u = A.mons[A.basis.at(i)].times(B.mons[B.basis.at(j)]);
    SparseVec<QQ> v{{T.index.at(u), Rat(1)}};
    full_reduce(T.slice, v);
    std::map<unsigned long, Rat> out;
    for (const auto& [idx, coef] : v) out.emplace(T.coset.at(idx), coef);
    return out;
  }

 private:
  struct Table {
    std::vector<Monomial> mons;
    std::map<Monomial, size_t> index;
    Echelon<QQ> slice;
    std::vector<size_t> basis;         // coset representatives, by index
    std::map<size_t, unsigned long> coset;  // monomial index -> position
  };

  const Table& table(const Int& n) const {
    const unsigned long d = to_ulong(n);
    if (d >= tables_.size())
      throw InternalInvariantError(
          "gr algebra: degree beyond the construction bound");
    return tables_[d];
  }

  GrPresentation pres_;
  std::vector<Table> tables_;
};

}  // namespace

GradedRingHandle gr_algebra(const NumericalSemigroup& S, unsigned long D) {
  return GradedRingHandle::custom(std::make_shared<GrAlgebra>(S, D));
}

BettiTable gr_betti_k(const NumericalSemigroup& S, unsigned long i_max,
                      unsigned long D, const FieldChoice& field) {
  if (i_max < 1 || D < i_max)
    throw Error("gr_betti_k: need 1 <= i_max <= degree bound");
  return resolve_residue_field(gr_algebra(S, D), i_max, Int(D), field).betti;
}

bool koszul_up_to(const NumericalSemigroup& S, unsigned long i_max,
                  unsigned long D, const FieldChoice& field) {
  const BettiTable t = gr_betti_k(S, i_max, D, field);
  for (const auto& [key, count] : t.graded) {
    if (count == 0) continue;
    if (key.second != Int(key.first)) return false;
  }
  return true;
}

unsigned long betti1_Q_gr(const NumericalSemigroup& S, unsigned long D) {
  return initial_ideal_truncated(S, D).minimal_generators.size();
}

}  // namespace nsres
