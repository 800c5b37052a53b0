#include "nsres/apery.hpp"

#include <algorithm>
#include <mutex>

namespace nsres {

namespace {

std::vector<Word> build_words(unsigned long m, unsigned long d) {
  std::vector<Word> out;
  if (d == 0) {
    out.push_back({});
    return out;
  }
  Word w(d);
  // Depth-first enumeration in lexicographic order: position 0 ranges over
  // all residues, later positions over nonzero residues.
  auto rec = [&](auto&& self, unsigned long pos) -> void {
    if (pos == d) {
      out.push_back(w);
      return;
    }
    for (unsigned long letter = pos == 0 ? 0 : 1; letter < m; ++letter) {
      w[pos] = letter;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

const std::vector<Word>& word_basis(unsigned long m, unsigned long d) {
  static std::map<std::pair<unsigned long, unsigned long>, std::vector<Word>>
      memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = memo.try_emplace({m, d});
  if (inserted) it->second = build_words(m, d);
  return it->second;
}

Int word_degree(const NumericalSemigroup& S, const Word& w) {
  Int total = 0;
  for (unsigned long letter : w) total += S.apery_value(letter);
  return total;
}

namespace {

std::vector<GenLabel> word_labels(const NumericalSemigroup& S,
                                  unsigned long d) {
  std::vector<GenLabel> out;
  for (const Word& w : word_basis(S.multiplicity(), d))
    out.push_back(word_label(w, word_degree(S, w)));
  return out;
}

std::vector<GenLabel> symbolic_word_labels(unsigned long m, unsigned long d) {
  std::vector<GenLabel> out;
  for (const Word& w : word_basis(m, d)) out.push_back(word_label(w, 0));
  return out;
}

std::map<Word, size_t> index_words(unsigned long m, unsigned long d) {
  std::map<Word, size_t> idx;
  const auto& words = word_basis(m, d);
  for (size_t i = 0; i < words.size(); ++i) idx.emplace(words[i], i);
  return idx;
}

// Targets of the boundary formula applied to w, with signs: the hat term
// (last letter removed, sign +1) and the tau_i merges. Targets with a zero
// letter past position 1 are dropped. The merged-letter value for tau_i is
// (w_i + w_{i+1}) mod m, which is 0-legal only in position 1.
struct BoundaryTerm {
  Word target;
  int sign;
  // Letters multiplied onto the target generator: either x_{letter} for the
  // hat term or y^{b_{ij}} for a merge; kept abstract for the two callers.
  bool is_hat;
  unsigned long hat_letter = 0;
  unsigned long merge_i = 0, merge_j = 0;
};

std::vector<BoundaryTerm> boundary_terms(unsigned long m, const Word& w) {
  unsigned long d = w.size();
  std::vector<BoundaryTerm> out;
  BoundaryTerm hat;
  hat.target = Word(w.begin(), w.end() - 1);
  hat.sign = 1;
  hat.is_hat = true;
  hat.hat_letter = w[d - 1];
  out.push_back(std::move(hat));
  for (unsigned long i = 1; i < d; ++i) {
    unsigned long merged = (w[i - 1] + w[i]) % m;
    if (merged == 0 && i > 1) continue;
    BoundaryTerm t;
    t.target = w;
    t.target[i - 1] = merged;
    t.target.erase(t.target.begin() + i);
    t.sign = ((d - i) % 2 == 0) ? 1 : -1;
    t.is_hat = false;
    t.merge_i = w[i - 1];
    t.merge_j = w[i];
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

DifferentialMatrix apery_differential(const NumericalSemigroup& S,
                                      unsigned long d) {
  if (d < 1) throw Error("apery_differential: d must be at least 1");
  unsigned long m = S.multiplicity();
  DifferentialMatrix M(S, word_labels(S, d - 1), word_labels(S, d));
  auto rows = index_words(m, d - 1);
  const auto& words = word_basis(m, d);
  for (size_t col = 0; col < words.size(); ++col)
    for (const BoundaryTerm& t : boundary_terms(m, words[col]))
      M.add_term(rows.at(t.target), col, t.sign);
  return M;
}

SymbolicMatrix apery_symbolic_differential(unsigned long m, unsigned long d) {
  if (m < 2) throw Error("apery_symbolic_differential: m must be at least 2");
  if (d < 1) throw Error("apery_symbolic_differential: d must be at least 1");
  SymbolicMatrix M;
  M.m = m;
  M.target = symbolic_word_labels(m, d - 1);
  M.source = symbolic_word_labels(m, d);
  auto rows = index_words(m, d - 1);
  const auto& words = word_basis(m, d);
  for (size_t col = 0; col < words.size(); ++col) {
    for (const BoundaryTerm& t : boundary_terms(m, words[col])) {
      SymbolicTerm term;
      term.coef = t.sign;
      term.xexp.assign(m, 0);
      if (t.is_hat) {
        if (t.hat_letter == 0)
          term.yexp = constant_exponent(1);  // x_0 = y
        else
          term.xexp[t.hat_letter] = 1;
      } else {
        term.yexp = b_symbol(t.merge_i, t.merge_j);
      }
      auto key = std::make_pair(rows.at(t.target), col);
      auto it = M.entries.find(key);
      if (it == M.entries.end()) {
        M.entries.emplace(key, std::move(term));
        continue;
      }
      // Same cell hit twice: homogeneity across the whole multiplicity
      // class forces the same monomial, so only the coefficients combine.
      if (it->second.xexp != term.xexp || it->second.yexp != term.yexp)
        throw InternalInvariantError(
            "symbolic differential: conflicting monomials in one cell");
      it->second.coef += term.coef;
      if (it->second.coef == 0) M.entries.erase(it);
    }
  }
  return M;
}

bool check_complex(const NumericalSemigroup& S, unsigned long D) {
  if (D < 2) throw Error("check_complex: D must be at least 2");
  DifferentialMatrix prev = apery_differential(S, 1);
  for (unsigned long d = 2; d <= D; ++d) {
    DifferentialMatrix cur = apery_differential(S, d);
    if (!compose(prev, cur).is_zero()) return false;
    prev = std::move(cur);
  }
  return true;
}

bool check_complex(const std::vector<DifferentialMatrix>& chain) {
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!compose(chain[i], chain[i + 1]).is_zero()) return false;
  return true;
}

namespace {

template <class F>
std::vector<Int> tensor_ranks(const F& f,
                              const std::vector<DifferentialMatrix>& chain) {
  std::vector<Int> ranks;
  for (const auto& M : chain)
    ranks.push_back(Int(sparse_rank(f, residue_columns(f, M))));
  return ranks;
}

}  // namespace

BettiTable betti_via_tensor(const std::vector<DifferentialMatrix>& chain,
                            const FieldChoice& field) {
  if (chain.empty()) throw Error("betti_via_tensor: empty chain");
  std::vector<Int> ranks = with_field(
      field, [&](auto f) { return tensor_ranks(f, chain); });
  BettiTable table;
  table.degree_bound = chain.size() - 1;
  for (size_t d = 0; d < chain.size(); ++d) {
    Int rank_d = d == 0 ? Int(0) : ranks[d - 1];
    Int rank_next = ranks[d];
    Int basis = d == 0 ? Int(chain[0].target().size())
                       : Int(chain[d - 1].source().size());
    table.values.push_back(basis - rank_d - rank_next);
  }
  return table;
}

BettiTable betti_via_tensor(const NumericalSemigroup& S, unsigned long D,
                            const FieldChoice& field) {
  std::vector<DifferentialMatrix> chain;
  for (unsigned long d = 1; d <= D + 1; ++d)
    chain.push_back(apery_differential(S, d));
  return betti_via_tensor(chain, field);
}

namespace {

template <class F>
std::map<Int, unsigned long> homology_by_degree(
    const F& f, const DifferentialMatrix& into, const DifferentialMatrix& from,
    const Int& N) {
  const NumericalSemigroup& S = into.semigroup();
  std::vector<Int> degrees;
  for (Int n = 0; n <= N; ++n) degrees.push_back(n);
  std::vector<unsigned long> dims(degrees.size(), 0);
  parallel_for(degrees.size(), [&](size_t idx) {
    const Int& n = degrees[idx];
    auto mid = alive_in_degree(into.source(), S, n);
    if (mid.empty()) return;
    auto tgt = alive_in_degree(into.target(), S, n);
    auto src = alive_in_degree(from.source(), S, n);
    size_t rank_out = sparse_rank(f, slice_columns(f, into, tgt, mid));
    size_t rank_in = sparse_rank(f, slice_columns(f, from, mid, src));
    if (rank_out + rank_in > mid.size())
      throw InternalInvariantError(
          "truncated_homology: image exceeds kernel; not a complex");
    dims[idx] = mid.size() - rank_out - rank_in;
  });
  std::map<Int, unsigned long> nonzero;
  for (size_t i = 0; i < degrees.size(); ++i)
    if (dims[i] != 0) nonzero.emplace(degrees[i], dims[i]);
  return nonzero;
}

}  // namespace

HomologyReport truncated_homology(const DifferentialMatrix& into,
                                  const DifferentialMatrix& from, const Int& N,
                                  const FieldChoice& field) {
  if (from.target().size() != into.source().size() ||
      from.target() != into.source())
    throw InternalInvariantError("truncated_homology: maps do not compose");
  HomologyReport report;
  report.d = 0;
  report.degree_bound = N;
  report.nonzero = with_field(field, [&](auto f) {
    return homology_by_degree(f, into, from, N);
  });
  return report;
}

HomologyReport truncated_homology(const NumericalSemigroup& S, unsigned long d,
                                  const Int& N, const FieldChoice& field) {
  if (d < 1) throw Error("truncated_homology: d must be at least 1");
  HomologyReport report = truncated_homology(
      apery_differential(S, d), apery_differential(S, d + 1), N, field);
  report.d = d;
  return report;
}

HomologyReport graded_cokernel(const DifferentialMatrix& d1, const Int& N,
                               const FieldChoice& field) {
  const NumericalSemigroup& S = d1.semigroup();
  HomologyReport report;
  report.d = 0;
  report.degree_bound = N;
  report.nonzero = with_field(field, [&](auto f) {
    std::map<Int, unsigned long> nonzero;
    for (Int n = 0; n <= N; ++n) {
      auto tgt = alive_in_degree(d1.target(), S, n);
      if (tgt.empty()) continue;
      auto src = alive_in_degree(d1.source(), S, n);
      size_t rank = sparse_rank(f, slice_columns(f, d1, tgt, src));
      if (tgt.size() != rank) nonzero.emplace(n, tgt.size() - rank);
    }
    return nonzero;
  });
  return report;
}

Int default_homology_bound(const NumericalSemigroup& S, unsigned long d) {
  Int max_ap = S.multiplicity();
  for (const Int& a : S.apery_tail()) max_ap = std::max(max_ap, a);
  return Int(d + 2) * max_ap;
}

}  // namespace nsres
