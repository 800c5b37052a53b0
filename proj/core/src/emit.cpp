#include "nsres/emit.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace nsres {
namespace {

using nlohmann::json;

// Numbers are JSON integers while they fit in 64 bits, decimal strings
// beyond; parsers accept both, so the encoding choice never leaks.
json j_int(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Int int_from(const json& j) {
  if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error("json: bad integer '" + j.get<std::string>() + "'");
    }
  }
  throw Error("json: expected an integer, got " + std::string(j.type_name()));
}

json j_rat(const Rat& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p())
    return json(v.get_num().get_si());
  return json(v.get_str());
}

Rat rat_from(const json& j) {
  if (j.is_number_unsigned()) return Rat(j.get<unsigned long>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    Rat q;
    try {
      q = Rat(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error("json: bad rational '" + j.get<std::string>() + "'");
    }
    q.canonicalize();
    return q;
  }
  throw Error("json: expected a rational, got " + std::string(j.type_name()));
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("json: not parseable");
  return j;
}

// at()/get() failures surface as nlohmann exceptions; translate them so
// callers only ever see the library's own error type.
template <class Fn>
auto translating(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(std::string("json: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json j_semigroup(const NumericalSemigroup& S) {
  return json{{"generators", S.generators()}};
}

NumericalSemigroup semigroup_from(const json& j) {
  return NumericalSemigroup::from_generators(
      j.at("generators").get<std::vector<unsigned long>>());
}

json j_pairs(const std::set<std::pair<unsigned long, unsigned long>>& ps) {
  json out = json::array();
  for (const auto& [a, b] : ps) out.push_back(json::array({a, b}));
  return out;
}

std::set<std::pair<unsigned long, unsigned long>> pairs_from(const json& j) {
  std::set<std::pair<unsigned long, unsigned long>> out;
  for (const auto& p : j)
    out.emplace(p.at(0).get<unsigned long>(), p.at(1).get<unsigned long>());
  return out;
}

json j_signature(const FaceSignature& sig) {
  return json{{"m", sig.m}, {"tight", j_pairs(sig.tight_pairs)}};
}

FaceSignature signature_from(const json& j) {
  FaceSignature sig;
  sig.m = j.at("m").get<unsigned long>();
  sig.tight_pairs = pairs_from(j.at("tight"));
  return sig;
}

json j_poset(const KunzPoset& P) {
  json covers = json::array();
  for (const auto& [lo, hi] : P.covers()) covers.push_back(json::array({lo, hi}));
  return json{{"m", P.m()}, {"strict", j_pairs(P.relation())}, {"covers", covers}};
}

json j_betti(const BettiTable& B) {
  json values = json::array();
  for (const auto& v : B.values) values.push_back(j_int(v));
  json graded = json::array();
  for (const auto& [key, count] : B.graded)
    graded.push_back(json{{"step", key.first},
                          {"degree", j_int(key.second)},
                          {"count", j_int(count)}});
  json out{{"values", values}, {"degree_bound", B.degree_bound}, {"graded", graded}};
  out["s_degree_bound"] = B.s_degree_bound ? j_int(*B.s_degree_bound) : json();
  return out;
}

BettiTable betti_from(const json& j) {
  BettiTable B;
  for (const auto& v : j.at("values")) B.values.push_back(int_from(v));
  B.degree_bound = j.at("degree_bound").get<unsigned long>();
  if (!j.at("s_degree_bound").is_null())
    B.s_degree_bound = int_from(j.at("s_degree_bound"));
  for (const auto& g : j.at("graded"))
    B.graded.emplace(std::pair{g.at("step").get<unsigned long>(),
                               int_from(g.at("degree"))},
                     int_from(g.at("count")));
  return B;
}

const char* kind_name(LabelKind k) {
  switch (k) {
    case LabelKind::Word: return "word";
    case LabelKind::Multiset: return "multiset";
    case LabelKind::Generator: return "generator";
  }
  throw InternalInvariantError("kind_name: unhandled label kind");
}

LabelKind kind_from(const std::string& name) {
  if (name == "word") return LabelKind::Word;
  if (name == "multiset") return LabelKind::Multiset;
  if (name == "generator") return LabelKind::Generator;
  throw Error("json: unknown label kind '" + name + "'");
}

json j_label(const GenLabel& l) {
  return json{{"kind", kind_name(l.kind)},
              {"data", l.data},
              {"degree", j_int(l.degree)}};
}

GenLabel label_from(const json& j) {
  GenLabel l;
  l.kind = kind_from(j.at("kind").get<std::string>());
  l.data = j.at("data").get<std::vector<unsigned long>>();
  l.degree = int_from(j.at("degree"));
  return l;
}

json j_labels(const std::vector<GenLabel>& ls) {
  json out = json::array();
  for (const auto& l : ls) out.push_back(j_label(l));
  return out;
}

std::vector<GenLabel> labels_from(const json& j) {
  std::vector<GenLabel> out;
  for (const auto& l : j) out.push_back(label_from(l));
  return out;
}

json j_matrix(const DifferentialMatrix& M) {
  json entries = json::array();
  for (const auto& [pos, coef] : M.entries()) {
    json terms = json::array(
        {json{{"coef", j_rat(coef)},
              {"degree", j_int(M.entry_degree(pos.first, pos.second))}}});
    entries.push_back(
        json{{"row", pos.first}, {"col", pos.second}, {"terms", terms}});
  }
  return json{{"semigroup", j_semigroup(M.semigroup())},
              {"target", j_labels(M.target())},
              {"source", j_labels(M.source())},
              {"entries", entries}};
}

DifferentialMatrix matrix_from(const json& j) {
  DifferentialMatrix M(semigroup_from(j.at("semigroup")),
                       labels_from(j.at("target")),
                       labels_from(j.at("source")));
  for (const auto& e : j.at("entries")) {
    size_t row = e.at("row").get<size_t>();
    size_t col = e.at("col").get<size_t>();
    for (const auto& t : e.at("terms")) {
      if (int_from(t.at("degree")) != M.entry_degree(row, col))
        throw Error("json: term degree disagrees with the basis labels");
      M.add_term(row, col, rat_from(t.at("coef")));
    }
  }
  return M;
}

json j_exponent(const SymbolicExponent& e) {
  json bs = json::array();
  for (const auto& [ij, k] : e.b)
    bs.push_back(json::array({ij.first, ij.second, k}));
  return json{{"b", bs}, {"constant", j_int(e.constant)}};
}

SymbolicExponent exponent_from(const json& j) {
  SymbolicExponent e;
  for (const auto& t : j.at("b")) {
    unsigned long k = t.at(2).get<unsigned long>();
    if (k) e.b[{t.at(0).get<unsigned long>(), t.at(1).get<unsigned long>()}] = k;
  }
  e.constant = int_from(j.at("constant"));
  return e;
}

json j_term(const SymbolicTerm& t) {
  return json{{"coef", j_rat(t.coef)},
              {"xexp", t.xexp},
              {"yexp", j_exponent(t.yexp)}};
}

SymbolicTerm term_from(const json& j) {
  SymbolicTerm t;
  t.coef = rat_from(j.at("coef"));
  t.xexp = j.at("xexp").get<std::vector<unsigned long>>();
  t.yexp = exponent_from(j.at("yexp"));
  return t;
}

json j_symbolic(const SymbolicMatrix& M) {
  json entries = json::array();
  for (const auto& [pos, term] : M.entries)
    entries.push_back(
        json{{"row", pos.first}, {"col", pos.second}, {"term", j_term(term)}});
  json out{{"m", M.m},
           {"target", j_labels(M.target)},
           {"source", j_labels(M.source)},
           {"entries", entries}};
  out["face"] = M.face ? j_signature(*M.face) : json();
  return out;
}

SymbolicMatrix symbolic_from(const json& j) {
  SymbolicMatrix M;
  M.m = j.at("m").get<unsigned long>();
  if (!j.at("face").is_null()) M.face = signature_from(j.at("face"));
  M.target = labels_from(j.at("target"));
  M.source = labels_from(j.at("source"));
  for (const auto& e : j.at("entries"))
    M.entries[{e.at("row").get<size_t>(), e.at("col").get<size_t>()}] =
        term_from(e.at("term"));
  return M;
}

json j_grpoly(const GrPoly& f, const std::vector<std::string>& names) {
  json terms = json::array();
  for (const auto& [mon, coef] : f)
    terms.push_back(json{{"coef", j_rat(coef)}, {"exponents", mon.e}});
  unsigned long degree = f.empty() ? 0 : f.begin()->first.total_degree();
  return json{{"degree", degree}, {"terms", terms}, {"text", render(f, names)}};
}

json j_presentation(const GrPresentation& P) {
  json gens = json::array();
  for (const auto& g : P.minimal_generators) gens.push_back(j_grpoly(g, P.names));
  return json{{"generators", P.generators},
              {"names", P.names},
              {"degree_bound", P.degree_bound},
              {"hilbert", P.hilbert},
              {"initial_ideal_generators", gens}};
}

json series_coefficients(const TruncatedSeries& s) {
  json out = json::array();
  for (unsigned long i = 0; i <= s.bound(); ++i) out.push_back(j_int(s[i]));
  return out;
}

json j_golod(const GolodReport& R) {
  long equal_through = -1;
  unsigned long D = std::min(R.lhs.bound(), R.rhs.bound());
  while (equal_through < static_cast<long>(D) &&
         R.lhs[static_cast<unsigned long>(equal_through + 1)] ==
             R.rhs[static_cast<unsigned long>(equal_through + 1)])
    ++equal_through;
  return json{{"generators", R.generators},
              {"piq", series_coefficients(R.piq)},
              {"piq_source", R.piq_source},
              {"lhs", series_coefficients(R.lhs)},
              {"rhs", series_coefficients(R.rhs)},
              {"equal", R.equal},
              {"equal_through", equal_through}};
}

json j_homology(const HomologyReport& R) {
  json nonzero = json::array();
  for (const auto& [degree, dim] : R.nonzero)
    nonzero.push_back(json{{"degree", j_int(degree)}, {"dim", dim}});
  return json{{"position", R.d},
              {"degree_bound", j_int(R.degree_bound)},
              {"nonzero", nonzero},
              {"exact", R.exact()}};
}

// ---- LaTeX ----

std::string subscript_body(const std::vector<unsigned long>& data) {
  std::ostringstream os;
  bool compact = true;
  for (unsigned long v : data) compact = compact && v < 10;
  for (size_t i = 0; i < data.size(); ++i) {
    if (!compact && i) os << ",";
    os << data[i];
  }
  return os.str();
}

std::string latex_label(const GenLabel& l) {
  switch (l.kind) {
    case LabelKind::Word:
    case LabelKind::Multiset: {
      std::string base = l.kind == LabelKind::Word ? "e" : "f";
      if (l.data.empty()) return base;
      return base + "_{" + subscript_body(l.data) + "}";
    }
    case LabelKind::Generator: {
      std::ostringstream os;
      os << "g_{" << (l.data.empty() ? 0 : l.data[0]) << "}";
      return os.str();
    }
  }
  throw InternalInvariantError("latex_label: unhandled label kind");
}

std::string latex_concrete_entry(const Rat& coef, const Int& degree) {
  std::string mono = degree == 0 ? "1" : "t^{" + degree.get_str() + "}";
  if (coef == 1) return mono;
  if (coef == -1) return "-" + mono;
  if (degree == 0) return coef.get_str();
  return coef.get_str() + mono;
}

std::string latex_exponent(const SymbolicExponent& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, k] : e.b) {
    if (k == 0) continue;
    if (!first) os << "+";
    if (k > 1) os << k;
    os << "b_{" << subscript_body({ij.first, ij.second}) << "}";
    first = false;
  }
  if (e.constant != 0) {
    if (!first) os << "+";
    os << e.constant.get_str();
  }
  return os.str();
}

std::string latex_variable(const std::string& name) {
  // Names arrive as "y" or "x_12"; brace multi-digit subscripts.
  auto us = name.find('_');
  if (us == std::string::npos || name.size() - us - 1 < 2) return name;
  return name.substr(0, us) + "_{" + name.substr(us + 1) + "}";
}

std::string latex_symbolic_entry(const SymbolicTerm& t) {
  std::ostringstream os;
  if (t.coef == -1)
    os << "-";
  else if (t.coef != 1)
    os << t.coef.get_str();
  bool printed = false;
  if (!t.yexp.is_zero()) {
    os << "y";
    if (!(t.yexp.b.empty() && t.yexp.constant == 1))
      os << "^{" << latex_exponent(t.yexp) << "}";
    printed = true;
  }
  for (size_t i = 0; i < t.xexp.size(); ++i) {
    if (t.xexp[i] == 0) continue;
    if (printed) os << " ";
    os << "x_{" << i << "}";
    if (t.xexp[i] > 1) os << "^{" << t.xexp[i] << "}";
    printed = true;
  }
  if (!printed) os << "1";
  return os.str();
}

template <class EntryFn>
std::string latex_array(const std::vector<GenLabel>& target,
                        const std::vector<GenLabel>& source, EntryFn entry) {
  if (target.empty() && source.empty())
    return "\\begin{array}{}\n\\end{array}\n";
  std::ostringstream os;
  os << "\\begin{array}{r|" << std::string(source.size(), 'c') << "}\n";
  for (const auto& l : source) os << " & " << latex_label(l);
  os << " \\\\\n\\hline\n";
  for (size_t row = 0; row < target.size(); ++row) {
    os << latex_label(target[row]);
    for (size_t col = 0; col < source.size(); ++col)
      os << " & " << entry(row, col);
    os << " \\\\\n";
  }
  os << "\\end{array}\n";
  return os.str();
}

}  // namespace

std::string json_text(const NumericalSemigroup& S) {
  return dump(j_semigroup(S));
}
std::string json_text(const FaceSignature& sig) { return dump(j_signature(sig)); }
std::string json_text(const KunzPoset& P) { return dump(j_poset(P)); }
std::string json_text(const BettiTable& B) { return dump(j_betti(B)); }
std::string json_text(const DifferentialMatrix& M) { return dump(j_matrix(M)); }
std::string json_text(const SymbolicMatrix& M) { return dump(j_symbolic(M)); }
std::string json_text(const GrPresentation& P) { return dump(j_presentation(P)); }
std::string json_text(const GolodReport& R) { return dump(j_golod(R)); }
std::string json_text(const HomologyReport& R) { return dump(j_homology(R)); }

NumericalSemigroup semigroup_from_json(const std::string& text) {
  return translating([&] { return semigroup_from(parse_text(text)); });
}
FaceSignature signature_from_json(const std::string& text) {
  return translating([&] { return signature_from(parse_text(text)); });
}
KunzPoset poset_from_json(const std::string& text) {
  return translating([&] {
    json j = parse_text(text);
    return KunzPoset(j.at("m").get<unsigned long>(), pairs_from(j.at("strict")));
  });
}
BettiTable betti_from_json(const std::string& text) {
  return translating([&] { return betti_from(parse_text(text)); });
}
DifferentialMatrix matrix_from_json(const std::string& text) {
  return translating([&] { return matrix_from(parse_text(text)); });
}
SymbolicMatrix symbolic_from_json(const std::string& text) {
  return translating([&] { return symbolic_from(parse_text(text)); });
}

std::string latex(const DifferentialMatrix& M) {
  return latex_array(M.target(), M.source(), [&](size_t row, size_t col) {
    const Rat* coef = M.entry(row, col);
    if (!coef) return std::string("\\cdot");
    return latex_concrete_entry(*coef, M.entry_degree(row, col));
  });
}

std::string latex(const SymbolicMatrix& M) {
  return latex_array(M.target, M.source, [&](size_t row, size_t col) {
    auto it = M.entries.find({row, col});
    if (it == M.entries.end()) return std::string("\\cdot");
    return latex_symbolic_entry(it->second);
  });
}

std::string latex(const Monomial& mon, const std::vector<std::string>& names) {
  if (mon.e.size() != names.size())
    throw LengthMismatchError("latex: name count != exponent count");
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < mon.e.size(); ++i) {
    if (mon.e[i] == 0) continue;
    if (any) os << " ";
    os << latex_variable(names[i]);
    if (mon.e[i] > 1) os << "^{" << mon.e[i] << "}";
    any = true;
  }
  if (!any) return "1";
  return os.str();
}

std::string latex(const Binomial& bin, const std::vector<std::string>& names) {
  return latex(bin.lhs, names) + " - " + latex(bin.rhs, names);
}

std::string dot(const KunzPoset& P) {
  std::ostringstream os;
  os << "digraph kunz {\n  rankdir=BT;\n";
  for (unsigned long i = 0; i < P.m(); ++i)
    os << "  " << i << " [label=\"" << i << "\"];\n";
  for (const auto& [lo, hi] : P.covers())
    os << "  " << lo << " -> " << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace nsres
