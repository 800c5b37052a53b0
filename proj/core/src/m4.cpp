#include "nsres/m4.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "nsres/errors.hpp"
#include "nsres/kunz.hpp"

namespace nsres {

namespace {

using Pair = std::pair<unsigned long, unsigned long>;
using PairSet = std::set<Pair>;

// The seven tight-pair sets realized by multiplicity-4 semigroups. Any other
// subset of the four candidate pairs forces two Apery values into the same
// residue class, so classification below is exhaustive.
struct FacePattern {
  PairSet pairs;
  FaceTagM4 tag;
  unsigned long unit;
};

const std::vector<FacePattern>& face_patterns() {
  static const std::vector<FacePattern> patterns = {
      {{}, FaceTagM4::Interior, 1},
      {{{1, 1}, {1, 2}}, FaceTagM4::Ray, 1},
      {{{2, 3}, {3, 3}}, FaceTagM4::Ray, 3},
      {{{1, 2}}, FaceTagM4::CIFacet, 1},
      {{{2, 3}}, FaceTagM4::CIFacet, 3},
      {{{1, 1}}, FaceTagM4::NonCIFacet, 1},
      {{{3, 3}}, FaceTagM4::NonCIFacet, 3},
  };
  return patterns;
}

// Orientation frame: construction formulas are written for the reference
// orientation of each face, and act() carries reference letters to the
// letters of the semigroup at hand (an involution, since 3*3 = 1 mod 4).
struct Frame {
  NumericalSemigroup S;
  unsigned long u;

  unsigned long act(unsigned long ref) const { return (ref * u) % 4; }
  Int deg(unsigned long ref) const { return S.apery_value(act(ref)); }

  Int word_deg(const Word& w) const {
    Int d = 0;
    for (unsigned long letter : w) d += deg(letter);
    return d;
  }

  // Residue class of a degree, written in reference letters.
  unsigned long cls(const Int& n) const {
    return act(to_ulong(mod_floor(n, Int(4))));
  }

  Word actual_word(const Word& ref) const {
    Word w = ref;
    for (unsigned long& letter : w) letter = act(letter);
    return w;
  }
};

Frame make_frame(const NumericalSemigroup& S, FaceTagM4 want,
                 const char* who) {
  FaceClassM4 cls = classify_face_m4(S);
  if (cls.tag != want) {
    std::ostringstream os;
    os << who << ": semigroup lies on the " << to_string(cls.tag)
       << " face, not " << to_string(want);
    throw WrongFaceError(os.str());
  }
  return Frame{S, cls.unit};
}

// ---------------------------------------------------------------------------
// Ray <4, a>: two-periodic rank-2 matrices.

Word ray_word(unsigned long d, bool second) {
  // First family: 0 1 3 1 3 ...; second family: 1 3 1 3 ...
  Word w;
  unsigned long next = 1;
  if (!second) {
    w.push_back(0);
  } else {
    w.push_back(1);
    next = 3;
  }
  while (w.size() < d) {
    w.push_back(next);
    next = (next == 1) ? 3 : 1;
  }
  return w;
}

std::vector<GenLabel> ray_basis(const Frame& F, unsigned long d,
                                bool with_degrees) {
  std::vector<GenLabel> basis;
  if (d == 0) {
    basis.push_back(word_label({}, 0));
    return basis;
  }
  for (bool second : {false, true}) {
    Word w = ray_word(d, second);
    Int deg = with_degrees ? F.word_deg(w) : Int(0);
    basis.push_back(word_label(F.actual_word(w), deg));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Complete intersection facet: multisets over {0,1,2} with at most one 0.

using Multiset = std::array<unsigned long, 3>;

std::vector<Multiset> ci_basis_multisets(unsigned long d) {
  std::vector<Multiset> basis;
  if (d == 0) {
    basis.push_back({0, 0, 0});
    return basis;
  }
  for (unsigned long c0 = std::min<unsigned long>(1, d) + 1; c0-- > 0;) {
    for (unsigned long c1 = d - c0 + 1; c1-- > 0;) {
      basis.push_back({c0, c1, d - c0 - c1});
    }
  }
  return basis;
}

GenLabel ci_label(const Frame& F, const Multiset& c, bool with_degree) {
  std::vector<unsigned long> letters;
  letters.insert(letters.end(), c[0], 0ul);
  letters.insert(letters.end(), c[1], F.act(1));
  letters.insert(letters.end(), c[2], 2ul);
  std::sort(letters.begin(), letters.end());
  Int deg = 0;
  if (with_degree)
    deg = Int(c[0]) * 4 + Int(c[1]) * F.deg(1) + Int(c[2]) * F.deg(2);
  return multiset_label(std::move(letters), std::move(deg));
}

// Targets of the five summands of the step map, paired with coefficients.
// A target outside the admissible range (negative count, or two 0s) is
// simply absent.
std::vector<std::pair<Multiset, Rat>> ci_column_terms(const Multiset& c,
                                                      unsigned long d) {
  std::vector<std::pair<Multiset, Rat>> terms;
  Rat sgn = (d % 2 == 1) ? 1 : -1;
  bool even2 = (c[2] % 2 == 0);
  if (c[2] > 0) terms.push_back({{c[0], c[1], c[2] - 1}, 1});
  if (c[1] > 0) terms.push_back({{c[0], c[1] - 1, c[2]}, even2 ? 1 : -1});
  if (even2 && c[1] >= 2) terms.push_back({{c[0], c[1] - 2, c[2] + 1}, -1});
  if (c[0] == 1) terms.push_back({{0, c[1], c[2]}, sgn});
  if (c[2] >= 2 && c[0] == 0) terms.push_back({{1, c[1], c[2] - 2}, sgn});
  return terms;
}

// Which of the five summand kinds a term is, recovered from the target
// multiset; used to attach the right symbolic monomial.
enum class CITermKind { X2, X1, B11, Y, B22 };

CITermKind ci_term_kind(const Multiset& c, const Multiset& t) {
  if (t[2] + 1 == c[2] && t[0] == c[0] && t[1] == c[1]) return CITermKind::X2;
  if (t[1] + 1 == c[1] && t[0] == c[0] && t[2] == c[2]) return CITermKind::X1;
  if (t[1] + 2 == c[1] && t[2] == c[2] + 1) return CITermKind::B11;
  if (t[0] + 1 == c[0] && t[1] == c[1] && t[2] == c[2]) return CITermKind::Y;
  return CITermKind::B22;
}

// ---------------------------------------------------------------------------
// The word language of the minimized resolution on the other facet.

bool language_step_ok(unsigned long prev, unsigned long next) {
  if (prev == 1) return next == 2 || next == 3;
  return next == 1 || next == 3;
}

void extend_language_words(const Word& w, unsigned long d,
                           std::vector<Word>& out) {
  if (w.size() == d) {
    out.push_back(w);
    return;
  }
  Word next = w;
  next.push_back(0);
  for (unsigned long letter = 1; letter <= 3; ++letter) {
    if (!language_step_ok(w.back(), letter)) continue;
    next.back() = letter;
    extend_language_words(next, d, out);
  }
}

// ---------------------------------------------------------------------------
// Minimized resolution on the facet a_2 = 2a_1.
//
// The full resolution of k restricts to the summands indexed by language
// words; p projects a free basis element onto that restriction. Elements
// are S-homogeneous, so a coefficient's monomial is implied by the degrees
// of the words it connects and only rational coefficients are stored.

using Element = std::map<Word, Rat>;

class NonCIBuilder {
 public:
  explicit NonCIBuilder(Frame frame) : F_(std::move(frame)) {
    columns_.resize(1);
    memo_.resize(1);
  }

  const Frame& frame() const { return F_; }

  const std::vector<Word>& basis(unsigned long d) {
    if (basis_.size() <= d) basis_.resize(d + 1);
    if (basis_[d].empty()) {
      if (d == 0)
        basis_[d].push_back(Word{});
      else
        basis_[d] = language_words(d);
    }
    return basis_[d];
  }

  const std::map<Word, Element>& columns(unsigned long d) {
    ensure_level(d);
    return columns_[d];
  }

 private:
  void ensure_level(unsigned long d) {
    if (columns_.size() <= d) {
      columns_.resize(d + 1);
      memo_.resize(d + 1);
    }
    for (unsigned long lvl = built_ + 1; lvl <= d; ++lvl) {
      for (const Word& w : basis(lvl)) {
        Element img = project(lvl - 1, boundary(w));
        check_column(w, img);
        columns_[lvl][w] = std::move(img);
      }
      built_ = lvl;
    }
  }

  // Full boundary of e_w: the hat term plus the signed letter merges, with
  // targets that have a zero letter past position 1 dropped.
  Element boundary(const Word& w) const {
    Element out;
    unsigned long d = static_cast<unsigned long>(w.size());
    Word hat(w.begin(), w.end() - 1);
    accumulate(out, hat, 1);
    for (unsigned long i = 1; i < d; ++i) {
      unsigned long merged = (w[i - 1] + w[i]) % 4;
      if (merged == 0 && i > 1) continue;
      Word t;
      t.reserve(d - 1);
      t.insert(t.end(), w.begin(), w.begin() + (i - 1));
      t.push_back(merged);
      t.insert(t.end(), w.begin() + (i + 1), w.end());
      accumulate(out, t, ((d - i) % 2 == 0) ? Rat(1) : Rat(-1));
    }
    return out;
  }

  Element project(unsigned long len, const Element& g) {
    Element out;
    for (const auto& [v, c] : g) {
      Element pv = p(v, len);
      for (const auto& [pw, pc] : pv) accumulate(out, pw, c * pc);
    }
    return out;
  }

  Element p(const Word& v, unsigned long len) {
    if (len == 0) return Element{{Word{}, Rat(1)}};
    for (size_t i = 1; i < v.size(); ++i)
      if (v[i] == 0) return {};
    if (is_language_word(v)) return Element{{v, Rat(1)}};
    auto hit = memo_[len].find(v);
    if (hit != memo_[len].end()) return hit->second;
    ensure_level(len);
    Element g = project(len - 1, boundary(v));
    Element lift = reduce(len, std::move(g), F_.word_deg(v));
    memo_[len][v] = lift;
    return lift;
  }

  // Rewrites g, a degree-N element over the length-(lvl-1) basis words, as
  // a combination of level-lvl columns. Classes are eliminated in the order
  // 3, 2, 1; a term survives only if its monomial is y-pure or y x_1-pure
  // with the word ending in 1, and for an element in the image nothing
  // survives.
  Element reduce(unsigned long lvl, Element g, const Int& N) {
    ensure_level(lvl);
    Element lift;
    for (unsigned long phase : {3ul, 2ul, 1ul}) {
      while (true) {
        auto pick = g.end();
        unsigned long lapp = 0;
        for (auto it = g.begin(); it != g.end(); ++it) {
          const Word& v = it->first;
          unsigned long r = F_.cls(N - F_.word_deg(v));
          bool last1 = !v.empty() && v.back() == 1;
          if (phase == 3 && r == 3) {
            pick = it;
            lapp = 3;
            break;
          }
          if (phase == 2 && r == 2) {
            pick = it;
            lapp = last1 ? 2 : 1;
            break;
          }
          if (phase == 1 && r == 1 && !last1) {
            pick = it;
            lapp = 1;
            break;
          }
        }
        if (pick == g.end()) break;
        const Word v = pick->first;
        const Rat c = pick->second;
        Word w = v;
        w.push_back(lapp);
        if (!is_language_word(w))
          throw InternalInvariantError(
              "minimized resolution: reduction stepped outside the word "
              "language");
        Int scal = N - F_.word_deg(w);
        if (scal < 0 || !F_.S.contains(scal))
          throw ReductionFailureError(
              "minimized resolution: reduction scalar t^" + to_string(scal) +
              " is not an element of the algebra");
        unsigned long sc = F_.cls(scal);
        if (!(sc == 0 || (sc == 1 && lapp == 1)))
          throw InternalInvariantError(
              "minimized resolution: reduction emitted an unreduced lift "
              "term");
        const Element& col = columns_[lvl].at(w);
        auto hat = col.find(v);
        if (hat == col.end() || hat->second != 1)
          throw InternalInvariantError(
              "minimized resolution: column lacks a unit hat coefficient");
        for (const auto& [tw, tc] : col) accumulate(g, tw, -c * tc);
        accumulate(lift, w, c);
      }
    }
    if (!g.empty())
      throw ReductionFailureError(
          "minimized resolution: reduction left a nonzero remainder on " +
          std::to_string(g.size()) + " words");
    return lift;
  }

  // Column sanity: a unit hat coefficient and every other term reduced.
  void check_column(const Word& w, const Element& img) const {
    Word hat(w.begin(), w.end() - 1);
    auto it = img.find(hat);
    if (it == img.end() || it->second != 1)
      throw InternalInvariantError(
          "minimized resolution: boundary column lost its hat term");
    Int N = F_.word_deg(w);
    for (const auto& [tw, tc] : img) {
      if (tw == hat) continue;
      unsigned long r = F_.cls(N - F_.word_deg(tw));
      bool last1 = !tw.empty() && tw.back() == 1;
      if (!(r == 0 || (r == 1 && last1)))
        throw InternalInvariantError(
            "minimized resolution: boundary column carries an unreduced "
            "term");
    }
  }

  static void accumulate(Element& e, const Word& w, const Rat& c) {
    if (c == 0) return;
    Rat& slot = e[w];
    slot += c;
    if (slot == 0) e.erase(w);
  }

  Frame F_;
  std::vector<std::vector<Word>> basis_;
  std::vector<std::map<Word, Element>> columns_;
  std::vector<std::map<Word, Element>> memo_;
  unsigned long built_ = 0;
};

std::vector<GenLabel> nonci_labels(NonCIBuilder& B, unsigned long d,
                                   bool with_degrees) {
  std::vector<GenLabel> labels;
  for (const Word& w : B.basis(d)) {
    Int deg = with_degrees ? B.frame().word_deg(w) : Int(0);
    labels.push_back(word_label(B.frame().actual_word(w), deg));
  }
  return labels;
}

DifferentialMatrix nonci_matrix(NonCIBuilder& B, unsigned long d) {
  DifferentialMatrix M(B.frame().S, nonci_labels(B, d - 1, true),
                       nonci_labels(B, d, true));
  std::map<Word, size_t> row, col;
  for (const Word& w : B.basis(d - 1)) row.emplace(w, row.size());
  for (const Word& w : B.basis(d)) col.emplace(w, col.size());
  for (const auto& [w, image] : B.columns(d))
    for (const auto& [v, c] : image) M.add_term(row.at(v), col.at(w), c);
  return M;
}

// ---------------------------------------------------------------------------
// Symbolic entries on the a_2 = 2a_1 facet.
//
// Degrees of words are linear in (a_1, a_3) once a_2 = 2a_1 is substituted,
// so each entry's monomial is determined by the words it connects: the
// residue class fixes the x part (1 -> x_1, 2 -> x_1^2, 3 -> x_3, all in
// reference letters) and what remains is four times the y-exponent, written
// over the symbols b_12, b_13, b_33 and the constant.

struct DegreeForm {
  Int a1 = 0, a3 = 0, c = 0;

  DegreeForm& operator+=(const DegreeForm& o) {
    a1 += o.a1;
    a3 += o.a3;
    c += o.c;
    return *this;
  }
  DegreeForm& operator-=(const DegreeForm& o) {
    a1 -= o.a1;
    a3 -= o.a3;
    c -= o.c;
    return *this;
  }
};

DegreeForm nonci_letter_form(unsigned long letter) {
  switch (letter) {
    case 0:
      return {0, 0, 4};
    case 1:
      return {1, 0, 0};
    case 2:
      return {2, 0, 0};
    default:
      return {0, 1, 0};
  }
}

DegreeForm nonci_word_form(const Word& w) {
  DegreeForm f;
  for (unsigned long letter : w) f += nonci_letter_form(letter);
  return f;
}

// Solves G = m12*(3,-1,0) + m13*(1,1,-4) + m33*(-2,2,0) + c*(0,0,4) over
// nonnegative integers, smallest m12 first. The combination is forced up to
// the face relation b_33 = b_13 - b_12 + 1, and preferring small m12 keeps
// single symbols intact.
SymbolicExponent nonci_decompose(const Frame& F, const DegreeForm& G) {
  Int sum = G.a1 + G.a3;
  if (mod_floor(sum, Int(2)) != 0)
    throw InternalInvariantError(
        "symbolic entry: y-exponent form has odd symbol content");
  Int pairs = sum / 2;
  for (Int m12 = 0; m12 <= pairs; ++m12) {
    Int m13 = pairs - m12;
    Int rest = G.a3 - m13 + m12;
    if (mod_floor(rest, Int(2)) != 0) continue;
    Int m33 = rest / 2;
    if (m33 < 0) continue;
    Int c4 = G.c + 4 * m13;
    if (mod_floor(c4, Int(4)) != 0) continue;
    Int c = c4 / 4;
    if (c < 0) continue;
    if (3 * m12 + m13 - 2 * m33 != G.a1) continue;
    SymbolicExponent e;
    auto add = [&e](unsigned long i, unsigned long j, const Int& k) {
      if (k == 0) return;
      unsigned long a = std::min(i, j), b = std::max(i, j);
      e.b[{a, b}] = to_ulong(k);
    };
    add(F.act(1), F.act(2), m12);
    add(F.act(1), F.act(3), m13);
    add(F.act(3), F.act(3), m33);
    e.constant = c;
    return e;
  }
  throw InternalInvariantError(
      "symbolic entry: y-exponent admits no nonnegative symbol "
      "decomposition");
}

SymbolicTerm nonci_symbolic_entry(const Frame& F, const Word& row,
                                  const Word& col, const Rat& coef) {
  DegreeForm form = nonci_word_form(col);
  form -= nonci_word_form(row);
  Int value = form.a1 * F.deg(1) + form.a3 * F.deg(3) + form.c;
  SymbolicTerm T;
  T.coef = coef;
  T.xexp.assign(4, 0);
  switch (F.cls(value)) {
    case 1:
      T.xexp[F.act(1)] = 1;
      form -= nonci_letter_form(1);
      break;
    case 2:
      T.xexp[F.act(1)] = 2;
      form -= nonci_letter_form(2);
      break;
    case 3:
      T.xexp[F.act(3)] = 1;
      form -= nonci_letter_form(3);
      break;
    default:
      break;
  }
  T.yexp = nonci_decompose(F, form);
  return T;
}

}  // namespace

std::string to_string(FaceTagM4 tag) {
  switch (tag) {
    case FaceTagM4::Interior:
      return "interior";
    case FaceTagM4::Ray:
      return "ray";
    case FaceTagM4::CIFacet:
      return "ci-facet";
    case FaceTagM4::NonCIFacet:
      return "non-ci-facet";
  }
  throw InternalInvariantError("unknown face tag");
}

FaceClassM4 classify_face_m4(const NumericalSemigroup& S) {
  if (S.multiplicity() != 4)
    throw NotMultiplicityFourError(
        "face classification needs multiplicity 4, got " +
        std::to_string(S.multiplicity()));
  FaceSignature sig = face_signature(S);
  for (const FacePattern& pat : face_patterns())
    if (sig.tight_pairs == pat.pairs) return {pat.tag, pat.unit};
  throw InternalInvariantError(
      "multiplicity-4 semigroup with unrecognized face signature");
}

std::vector<DifferentialMatrix> ray_resolution(const NumericalSemigroup& S,
                                               unsigned long D) {
  Frame F = make_frame(S, FaceTagM4::Ray, "ray_resolution");
  std::vector<DifferentialMatrix> chain;
  for (unsigned long d = 1; d <= D; ++d) {
    DifferentialMatrix M(S, ray_basis(F, d - 1, true), ray_basis(F, d, true));
    if (d == 1) {
      M.add_term(0, 0, 1);  // y
      M.add_term(0, 1, 1);  // x_1
    } else if (d % 2 == 0) {
      M.add_term(0, 0, 1);   // x_1
      M.add_term(0, 1, -1);  // -y^{b_13}
      M.add_term(1, 0, -1);  // -y
      M.add_term(1, 1, 1);   // x_1^3
    } else {
      M.add_term(0, 0, 1);  // x_1^3
      M.add_term(0, 1, 1);  // y^{b_13}
      M.add_term(1, 0, 1);  // y
      M.add_term(1, 1, 1);  // x_1
    }
    chain.push_back(std::move(M));
  }
  return chain;
}

SymbolicMatrix ray_symbolic(const NumericalSemigroup& S, unsigned long d) {
  Frame F = make_frame(S, FaceTagM4::Ray, "ray_symbolic");
  SymbolicMatrix M;
  M.m = 4;
  M.face = face_signature(S);
  M.target = ray_basis(F, d - 1, false);
  M.source = ray_basis(F, d, false);
  auto x1 = [&F](unsigned long power) {
    SymbolicTerm T;
    T.coef = 1;
    T.xexp.assign(4, 0);
    T.xexp[F.act(1)] = power;
    return T;
  };
  auto ypow = [](SymbolicExponent e) {
    SymbolicTerm T;
    T.coef = 1;
    T.xexp.assign(4, 0);
    T.yexp = std::move(e);
    return T;
  };
  SymbolicExponent b13 = b_symbol(F.act(1), F.act(3));
  if (d == 1) {
    M.entries[{0, 0}] = ypow(constant_exponent(1));
    M.entries[{0, 1}] = x1(1);
  } else if (d % 2 == 0) {
    M.entries[{0, 0}] = x1(1);
    M.entries[{0, 1}] = ypow(b13);
    M.entries[{0, 1}].coef = -1;
    M.entries[{1, 0}] = ypow(constant_exponent(1));
    M.entries[{1, 0}].coef = -1;
    M.entries[{1, 1}] = x1(3);
  } else {
    M.entries[{0, 0}] = x1(3);
    M.entries[{0, 1}] = ypow(b13);
    M.entries[{1, 0}] = ypow(constant_exponent(1));
    M.entries[{1, 1}] = x1(1);
  }
  return M;
}

DifferentialMatrix ci_differential(const NumericalSemigroup& S,
                                   unsigned long d) {
  Frame F = make_frame(S, FaceTagM4::CIFacet, "ci_differential");
  if (d == 0)
    throw Error("ci_differential: step must be at least 1");
  std::vector<Multiset> rows = ci_basis_multisets(d - 1);
  std::vector<Multiset> cols = ci_basis_multisets(d);
  std::vector<GenLabel> target, source;
  std::map<Multiset, size_t> row_of;
  for (const Multiset& c : rows) {
    row_of.emplace(c, target.size());
    target.push_back(ci_label(F, c, true));
  }
  for (const Multiset& c : cols) source.push_back(ci_label(F, c, true));
  DifferentialMatrix M(S, std::move(target), std::move(source));
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [t, coef] : ci_column_terms(cols[j], d))
      M.add_term(row_of.at(t), j, coef);
  return M;
}

SymbolicMatrix ci_symbolic(const NumericalSemigroup& S, unsigned long d) {
  Frame F = make_frame(S, FaceTagM4::CIFacet, "ci_symbolic");
  if (d == 0)
    throw Error("ci_symbolic: step must be at least 1");
  std::vector<Multiset> rows = ci_basis_multisets(d - 1);
  std::vector<Multiset> cols = ci_basis_multisets(d);
  SymbolicMatrix M;
  M.m = 4;
  M.face = face_signature(S);
  std::map<Multiset, size_t> row_of;
  for (const Multiset& c : rows) {
    row_of.emplace(c, M.target.size());
    M.target.push_back(ci_label(F, c, false));
  }
  for (const Multiset& c : cols) M.source.push_back(ci_label(F, c, false));
  for (size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [t, coef] : ci_column_terms(cols[j], d)) {
      SymbolicTerm T;
      T.coef = coef;
      T.xexp.assign(4, 0);
      switch (ci_term_kind(cols[j], t)) {
        case CITermKind::X2:
          T.xexp[2] = 1;
          break;
        case CITermKind::X1:
          T.xexp[F.act(1)] = 1;
          break;
        case CITermKind::B11:
          T.yexp = b_symbol(F.act(1), F.act(1));
          break;
        case CITermKind::Y:
          T.yexp = constant_exponent(1);
          break;
        case CITermKind::B22:
          T.yexp = b_symbol(2, 2);
          break;
      }
      M.entries[{row_of.at(t), j}] = std::move(T);
    }
  }
  return M;
}

bool is_language_word(const Word& w) {
  if (w.empty()) return true;
  if (w[0] != 0 && w[0] != 1 && w[0] != 3) return false;
  for (size_t i = 1; i < w.size(); ++i)
    if (!language_step_ok(w[i - 1], w[i])) return false;
  return true;
}

std::vector<Word> language_words(unsigned long d) {
  std::vector<Word> out;
  if (d == 0) {
    out.push_back(Word{});
    return out;
  }
  for (unsigned long first : {0ul, 1ul, 3ul})
    extend_language_words(Word{first}, d, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DifferentialMatrix> nonci_resolution(const NumericalSemigroup& S,
                                                 unsigned long D) {
  Frame F = make_frame(S, FaceTagM4::NonCIFacet, "nonci_resolution");
  NonCIBuilder B(std::move(F));
  std::vector<DifferentialMatrix> chain;
  for (unsigned long d = 1; d <= D; ++d) chain.push_back(nonci_matrix(B, d));
  return chain;
}

SymbolicMatrix nonci_symbolic(const NumericalSemigroup& S, unsigned long d) {
  Frame F = make_frame(S, FaceTagM4::NonCIFacet, "nonci_symbolic");
  NonCIBuilder B(std::move(F));
  if (d == 0)
    throw Error("nonci_symbolic: step must be at least 1");
  SymbolicMatrix M;
  M.m = 4;
  M.face = face_signature(S);
  M.target = nonci_labels(B, d - 1, false);
  M.source = nonci_labels(B, d, false);
  std::map<Word, size_t> row, col;
  for (const Word& w : B.basis(d - 1)) row.emplace(w, row.size());
  for (const Word& w : B.basis(d)) col.emplace(w, col.size());
  for (const auto& [w, image] : B.columns(d))
    for (const auto& [v, c] : image)
      M.entries[{row.at(v), col.at(w)}] =
          nonci_symbolic_entry(B.frame(), v, w, c);
  return M;
}

std::vector<DifferentialMatrix> m4_resolution(const NumericalSemigroup& S,
                                              unsigned long D) {
  FaceClassM4 cls = classify_face_m4(S);
  switch (cls.tag) {
    case FaceTagM4::Ray:
      return ray_resolution(S, D);
    case FaceTagM4::CIFacet: {
      std::vector<DifferentialMatrix> chain;
      for (unsigned long d = 1; d <= D; ++d)
        chain.push_back(ci_differential(S, d));
      return chain;
    }
    case FaceTagM4::NonCIFacet:
      return nonci_resolution(S, D);
    case FaceTagM4::Interior: {
      std::vector<DifferentialMatrix> chain;
      for (unsigned long d = 1; d <= D; ++d)
        chain.push_back(apery_differential(S, d));
      return chain;
    }
  }
  throw InternalInvariantError("unknown face tag");
}

}  // namespace nsres
