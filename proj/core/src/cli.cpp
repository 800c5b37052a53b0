#include "nsres/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsres/apery.hpp"
#include "nsres/assoc_graded.hpp"
#include "nsres/emit.hpp"
#include "nsres/errors.hpp"
#include "nsres/kunz.hpp"
#include "nsres/m4.hpp"
#include "nsres/oracle.hpp"
#include "nsres/ring.hpp"
#include "nsres/semigroup.hpp"
#include "nsres/series.hpp"

namespace nsres::cli {
namespace {

using nlohmann::json;

json j_int(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json j_ints(const std::vector<Int>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(j_int(v));
  return out;
}

// Re-parse the library's own JSON text for embedding into the top-level
// document; keeps the emitters the single source of shape truth.
json embed(const std::string& emitted) { return json::parse(emitted); }

json document(const std::string& command, const NumericalSemigroup& S) {
  return json{{"schema", kJsonSchema},
              {"command", command},
              {"generators", S.generators()}};
}

std::string join(const std::vector<Int>& vs) {
  std::ostringstream os;
  for (size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i].get_str();
  return os.str();
}

std::string join(const std::vector<unsigned long>& vs) {
  std::ostringstream os;
  for (size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

std::string join(const std::vector<std::string>& vs) {
  std::ostringstream os;
  for (size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

void print_document(std::ostream& out, const json& doc) {
  out << doc.dump(2) << "\n";
}

// ---- shared option plumbing ----

struct Args {
  std::vector<unsigned long> gens;
  std::string format = "text";
  std::string field = "rat";
  unsigned long steps = 0;
  long degree_bound = -1;  // -1: use the command's documented default
  bool symbolic = false;
};

NumericalSemigroup semigroup(const Args& a) {
  return NumericalSemigroup::from_generators(a.gens);
}

FieldChoice field(const Args& a) { return FieldChoice::parse(a.field); }

void add_generators(CLI::App* sub, Args& a) {
  sub->add_option("generators", a.gens, "semigroup generators (positive, gcd 1)")
      ->required()
      ->check(CLI::PositiveNumber);
}

void add_format(CLI::App* sub, Args& a, std::vector<std::string> allowed) {
  sub->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
}

void add_field(CLI::App* sub, Args& a) {
  CLI::Validator parses_as_field(
      [](std::string& s) -> std::string {
        try {
          // Instantiating the field also runs the primality check, so a
          // bad modulus is rejected as flag syntax rather than much later.
          with_field(FieldChoice::parse(s), [](auto) { return 0; });
        } catch (const Error& e) {
          return e.what();
        }
        return {};
      },
      "rat or fp:P", "FIELD");
  sub->add_option("--field", a.field, "coefficient field")
      ->check(parses_as_field)
      ->capture_default_str();
}

void add_steps(CLI::App* sub, Args& a, unsigned long dflt,
               const std::string& what) {
  a.steps = dflt;
  sub->add_option("--steps", a.steps, what)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_degree_bound(CLI::App* sub, Args& a, const std::string& what) {
  sub->add_option("--degree-bound", a.degree_bound, what)
      ->check(CLI::PositiveNumber);
}

std::vector<unsigned long> parse_gen_list(const std::string& text) {
  std::vector<unsigned long> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v == 0)
      throw CLI::ValidationError("generators",
                                 "'" + tok + "' is not a positive integer");
    out.push_back(v);
  }
  if (out.empty())
    throw CLI::ValidationError("generators", "empty generator list");
  return out;
}

// ---- matrix printing shared by resolve and m4 ----

void print_matrix_text(std::ostream& out, const DifferentialMatrix& M) {
  out << M.target().size() << " x " << M.source().size() << "\n";
  for (const auto& [pos, coef] : M.entries()) {
    (void)coef;
    out << "  " << M.source()[pos.second].text() << " -> "
        << M.target()[pos.first].text() << ": "
        << render(M.entry_element(pos.first, pos.second)) << "\n";
  }
}

void print_matrix_text(std::ostream& out, const SymbolicMatrix& M) {
  out << M.target.size() << " x " << M.source.size() << "\n";
  for (const auto& [pos, term] : M.entries)
    out << "  " << M.source[pos.second].text() << " -> "
        << M.target[pos.first].text() << ": " << term.text() << "\n";
}

template <class Matrix>
void print_steps(std::ostream& out, const Args& a,
                 const std::string& command, const NumericalSemigroup& S,
                 const std::vector<Matrix>& steps,
                 const json& extra = json::object()) {
  if (a.format == "json") {
    json doc = document(command, S);
    doc["symbolic"] = a.symbolic;
    json arr = json::array();
    for (const auto& M : steps) arr.push_back(embed(json_text(M)));
    doc["steps"] = arr;
    for (const auto& [key, value] : extra.items()) doc[key] = value;
    print_document(out, doc);
  } else if (a.format == "latex") {
    for (size_t d = 0; d < steps.size(); ++d) {
      if (d) out << "\n";
      out << "\\partial_{" << d + 1 << "} =\n" << latex(steps[d]);
    }
  } else {
    for (size_t d = 0; d < steps.size(); ++d) {
      out << "step " << d + 1 << ": ";
      print_matrix_text(out, steps[d]);
    }
  }
}

// ---- subcommands ----

void cmd_apery(const Args& a, std::ostream& out) {
  auto S = semigroup(a);
  if (a.format == "json") {
    json doc = document("apery", S);
    doc["m"] = S.multiplicity();
    doc["apery"] = j_ints(S.apery_tail());
    doc["apery_set"] = j_ints(apery_set(S));
    doc["frobenius"] = j_int(S.frobenius());
    doc["minimal_generators"] = S.minimal_generators();
    doc["med"] = S.is_med();
    print_document(out, doc);
    return;
  }
  out << "S = " << to_string(S) << "\n";
  out << "m = " << S.multiplicity() << "\n";
  out << "apery tail: " << join(S.apery_tail()) << "\n";
  out << "apery set: " << join(apery_set(S)) << "\n";
  out << "frobenius: " << S.frobenius().get_str() << "\n";
  out << "minimal generators: " << join(S.minimal_generators()) << "\n";
  out << "med: " << (S.is_med() ? "true" : "false") << "\n";
}

void cmd_ideal(const Args& a, std::ostream& out) {
  auto S = semigroup(a);
  auto gens = toric_generators(S);
  auto names = variable_names(GradedKind::Q, S);
  if (a.format == "json") {
    json doc = document("ideal", S);
    doc["names"] = names;
    json arr = json::array();
    for (const auto& bin : gens)
      arr.push_back(json{{"lhs", bin.lhs.e},
                         {"rhs", bin.rhs.e},
                         {"text", render(bin, names)}});
    doc["ideal_generators"] = arr;
    print_document(out, doc);
  } else if (a.format == "latex") {
    out << "\\begin{gather*}\n";
    for (size_t i = 0; i < gens.size(); ++i)
      out << latex(gens[i], names) << (i + 1 < gens.size() ? " \\\\" : "")
          << "\n";
    out << "\\end{gather*}\n";
  } else {
    for (const auto& bin : gens) out << render(bin, names) << "\n";
  }
}

void cmd_kunz(const Args& a, std::ostream& out) {
  auto S = semigroup(a);
  BMatrix B(S);
  auto sig = face_signature(B);
  auto P = kunz_poset(S);
  if (a.format == "dot") {
    out << dot(P);
    return;
  }
  if (a.format == "json") {
    json doc = document("kunz", S);
    doc["m"] = S.multiplicity();
    doc["apery"] = j_ints(S.apery_tail());
    json b = json::array();
    size_t at = 0;
    for (unsigned long i = 1; i < S.multiplicity(); ++i)
      for (unsigned long j = i; j < S.multiplicity(); ++j)
        b.push_back(json{{"i", i}, {"j", j},
                         {"value", j_int(B.upper_entries()[at++])}});
    doc["b"] = b;
    doc["face"] = embed(json_text(sig));
    doc["poset"] = embed(json_text(P));
    print_document(out, doc);
    return;
  }
  out << "S = " << to_string(S) << "\n";
  out << "m = " << S.multiplicity() << "\n";
  out << "apery tail: " << join(S.apery_tail()) << "\n";
  out << "b values:";
  {
    size_t at = 0;
    for (unsigned long i = 1; i < S.multiplicity(); ++i)
      for (unsigned long j = i; j < S.multiplicity(); ++j)
        out << " b_" << i << j << "=" << B.upper_entries()[at++].get_str();
  }
  out << "\n";
  out << "tight pairs:";
  if (sig.tight_pairs.empty()) out << " none";
  for (const auto& [i, j] : sig.tight_pairs) out << " (" << i << "," << j << ")";
  out << "\n";
  out << "covers:";
  for (const auto& [lo, hi] : P.covers()) out << " " << lo << "<" << hi;
  out << "\n";
}

void cmd_same_face(const std::string& a_text, const std::string& b_text,
                   const std::string& format, std::ostream& out) {
  auto A = NumericalSemigroup::from_generators(parse_gen_list(a_text));
  auto B = NumericalSemigroup::from_generators(parse_gen_list(b_text));
  auto sig_a = face_signature(A);
  auto sig_b = face_signature(B);
  bool same = same_face(A, B);
  if (format == "json") {
    json doc{{"schema", kJsonSchema}, {"command", "same-face"}};
    doc["a"] = json{{"generators", A.generators()},
                    {"signature", embed(json_text(sig_a))}};
    doc["b"] = json{{"generators", B.generators()},
                    {"signature", embed(json_text(sig_b))}};
    doc["same_face"] = same;
    print_document(out, doc);
    return;
  }
  auto describe = [&](const NumericalSemigroup& S, const FaceSignature& sig) {
    std::ostringstream os;
    os << to_string(S) << ": m=" << S.multiplicity() << ", tight";
    if (sig.tight_pairs.empty()) os << " none";
    for (const auto& [i, j] : sig.tight_pairs) os << " (" << i << "," << j << ")";
    return os.str();
  };
  out << "A = " << describe(A, sig_a) << "\n";
  out << "B = " << describe(B, sig_b) << "\n";
  out << "same face: " << (same ? "true" : "false") << "\n";
}

void cmd_resolve(const Args& a, std::ostream& out) {
  auto S = semigroup(a);
  if (a.symbolic) {
    std::vector<SymbolicMatrix> steps;
    for (unsigned long d = 1; d <= a.steps; ++d)
      steps.push_back(apery_symbolic_differential(S.multiplicity(), d));
    print_steps(out, a, "resolve", S, steps);
  } else {
    std::vector<DifferentialMatrix> steps;
    for (unsigned long d = 1; d <= a.steps; ++d)
      steps.push_back(apery_differential(S, d));
    print_steps(out, a, "resolve", S, steps);
  }
}

void cmd_betti(const Args& a, bool oracle, const std::string& ideal,
               bool gr, std::ostream& out) {
  auto S = semigroup(a);
  auto fc = field(a);
  BettiTable B;
  std::string mode = "tensor";
  if (gr) {
    mode = "gr";
    unsigned long D = a.degree_bound >= 0
                          ? static_cast<unsigned long>(a.degree_bound)
                          : a.steps + 3;
    B = gr_betti_k(S, a.steps, D, fc);
  } else if (!ideal.empty()) {
    mode = "ideal over " + ideal;
    GradedKind kind = ideal == "q" ? GradedKind::Q : GradedKind::Qmin;
    if (a.degree_bound >= 0)
      B = resolve_defining_ideal(S, kind, a.steps, Int(a.degree_bound), fc)
              .betti;
    else
      B = oracle_betti_ideal(S, kind, a.steps, fc);
  } else if (oracle) {
    mode = "oracle";
    if (a.degree_bound >= 0)
      B = resolve_residue_field(GradedRingHandle::semigroup_algebra(S),
                                a.steps, Int(a.degree_bound), fc)
              .betti;
    else
      B = oracle_betti_k(S, a.steps, fc);
  } else {
    B = betti_via_tensor(S, a.steps, fc);
  }
  if (a.format == "json") {
    json doc = document("betti", S);
    doc["mode"] = mode;
    doc["field"] = fc.describe();
    doc["betti"] = embed(json_text(B));
    print_document(out, doc);
    return;
  }
  out << join(B.values) << "\n";
}

void cmd_homology(const Args& a, bool cokernel, std::ostream& out) {
  auto S = semigroup(a);
  auto fc = field(a);
  Int N = a.degree_bound >= 0 ? Int(a.degree_bound)
                              : default_homology_bound(S, a.steps);
  HomologyReport R = cokernel
                         ? graded_cokernel(apery_differential(S, 1), N, fc)
                         : truncated_homology(S, a.steps, N, fc);
  if (a.format == "json") {
    json doc = document("homology", S);
    doc["cokernel"] = cokernel;
    doc["report"] = embed(json_text(R));
    print_document(out, doc);
    return;
  }
  if (cokernel) {
    out << "cokernel of step 1, degrees 0.." << N.get_str() << ":";
    for (const auto& [degree, dim] : R.nonzero)
      out << " " << degree.get_str() << " (dim " << dim << ")";
    if (R.nonzero.empty()) out << " zero";
    out << "\n";
    return;
  }
  out << "homology at step " << a.steps << ", degrees 0.." << N.get_str()
      << ": ";
  if (R.exact()) {
    out << "exact\n";
    return;
  }
  out << "nonzero at";
  for (const auto& [degree, dim] : R.nonzero)
    out << " " << degree.get_str() << " (dim " << dim << ")";
  out << "\n";
}

void cmd_m4(const Args& a, std::ostream& out) {
  auto S = semigroup(a);
  auto face = classify_face_m4(S);
  json extra{{"face", json{{"tag", to_string(face.tag)}, {"unit", face.unit}}}};
  if (a.format == "text")
    out << "face: " << to_string(face.tag) << ", unit " << face.unit << "\n";
  if (a.steps == 0) {
    if (a.format == "json") {
      json doc = document("m4", S);
      doc["face"] = extra["face"];
      print_document(out, doc);
    }
    return;
  }
  if (a.symbolic) {
    std::vector<SymbolicMatrix> steps;
    for (unsigned long d = 1; d <= a.steps; ++d) {
      switch (face.tag) {
        case FaceTagM4::Ray: steps.push_back(ray_symbolic(S, d)); break;
        case FaceTagM4::CIFacet: steps.push_back(ci_symbolic(S, d)); break;
        case FaceTagM4::NonCIFacet: steps.push_back(nonci_symbolic(S, d)); break;
        case FaceTagM4::Interior:
          steps.push_back(apery_symbolic_differential(4, d));
          break;
      }
    }
    print_steps(out, a, "m4", S, steps, extra);
  } else {
    print_steps(out, a, "m4", S, m4_resolution(S, a.steps), extra);
  }
}

void cmd_golod(const Args& a, const std::string& piq_text, std::ostream& out) {
  auto S = semigroup(a);
  auto fc = field(a);
  std::optional<TruncatedSeries> piq;
  if (!piq_text.empty()) {
    std::vector<Int> coef;
    std::istringstream is(piq_text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        coef.emplace_back(tok);
      } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--piq", "'" + tok + "' is not an integer");
      }
    }
    piq = TruncatedSeries(std::move(coef));
  }
  GolodReport R = golod_report(S, a.steps, piq, fc);
  if (a.format == "json") {
    json doc = document("golod", S);
    doc["report"] = embed(json_text(R));
    print_document(out, doc);
    return;
  }
  out << "Golod through degree " << a.steps << ": "
      << (R.equal ? "true" : "false") << "\n";
  out << "P_I = " << R.piq.text() << " [" << R.piq_source << "]\n";
  if (!R.equal) {
    out << "series:   " << R.lhs.text() << "\n";
    out << "extremal: " << R.rhs.text() << "\n";
  }
}

void cmd_grm(const Args& a, std::ostream& out) {
  auto S = semigroup(a);
  unsigned long D = a.degree_bound >= 0
                        ? static_cast<unsigned long>(a.degree_bound)
                        : 6;
  auto P = initial_ideal_truncated(S, D);
  std::optional<QuadraticReport> quad;
  if (D >= 3) quad = is_quadratic(S, D);
  std::optional<BettiTable> B;
  if (a.steps > 0) B = gr_betti_k(S, a.steps, D, field(a));
  if (a.format == "json") {
    json doc = document("grm", S);
    doc["presentation"] = embed(json_text(P));
    if (quad) {
      json cert = json::array();
      for (const auto& g : quad->certificate)
        cert.push_back(render(g, P.names));
      doc["quadratic"] = json{{"value", quad->quadratic}, {"witnesses", cert}};
    }
    if (B) doc["betti"] = embed(json_text(*B));
    print_document(out, doc);
    return;
  }
  out << "ambient: " << join(P.names) << "\n";
  out << "hilbert:";
  for (unsigned long h : P.hilbert) out << " " << h;
  out << "\n";
  out << "initial ideal generators (degree <= " << D << "):\n";
  for (const auto& g : P.minimal_generators)
    out << "  [" << g.begin()->first.total_degree() << "] "
        << render(g, P.names) << "\n";
  if (quad) {
    out << "quadratic through " << D << ": "
        << (quad->quadratic ? "true" : "false");
    if (!quad->quadratic)
      out << " (witness: " << render(quad->certificate.front(), P.names) << ")";
    out << "\n";
  }
  if (B) {
    out << "k betti over gr: " << join(B->values) << "\n";
    for (const auto& [key, count] : B->graded)
      if (count != 0)
        out << "  beta(" << key.first << ", " << key.second.get_str()
            << ") = " << count.get_str() << "\n";
  }
}

void cmd_koszul(const Args& a, std::ostream& out) {
  auto S = semigroup(a);
  unsigned long D = a.degree_bound >= 0
                        ? static_cast<unsigned long>(a.degree_bound)
                        : 6;
  BettiTable B = gr_betti_k(S, a.steps, D, field(a));
  bool linear = true;
  for (const auto& [key, count] : B.graded)
    if (count != 0 && key.second != Int(key.first)) linear = false;
  if (a.format == "json") {
    json doc = document("koszul", S);
    doc["steps"] = a.steps;
    doc["degree_bound"] = D;
    doc["linear"] = linear;
    doc["betti"] = embed(json_text(B));
    print_document(out, doc);
    return;
  }
  out << "linear through step " << a.steps << ", degree " << D << ": "
      << (linear ? "true" : "false") << "\n";
  out << "k betti over gr: " << join(B.values) << "\n";
  if (!linear) {
    out << "off-diagonal:";
    for (const auto& [key, count] : B.graded)
      if (count != 0 && key.second != Int(key.first))
        out << " beta(" << key.first << ", " << key.second.get_str()
            << ")=" << count.get_str();
    out << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact computations over numerical semigroup algebras"};
  app.name("nsres");
  app.require_subcommand(1);

  Args ap, id, kz, rs, bt, hm, m4a, gl, gr, ko;
  std::string sf_a, sf_b, sf_format = "text";
  bool betti_oracle = false, betti_gr = false, homology_cokernel = false;
  std::string betti_ideal, golod_piq;

  auto* apery = app.add_subcommand("apery", "Apery set and basic invariants");
  add_generators(apery, ap);
  add_format(apery, ap, {"text", "json"});

  auto* ideal = app.add_subcommand("ideal", "defining toric ideal generators");
  add_generators(ideal, id);
  add_format(ideal, id, {"text", "json", "latex"});

  auto* kunz = app.add_subcommand("kunz", "b values, face signature, poset");
  add_generators(kunz, kz);
  add_format(kunz, kz, {"text", "json", "dot"});

  auto* same = app.add_subcommand("same-face",
                                  "do two semigroups share a Kunz face");
  same->add_option("a", sf_a, "first semigroup, comma-separated generators")
      ->required();
  same->add_option("b", sf_b, "second semigroup, comma-separated generators")
      ->required();
  same->add_option("--format", sf_format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* resolve = app.add_subcommand("resolve", "Apery resolution matrices");
  add_generators(resolve, rs);
  add_steps(resolve, rs, 3, "number of boundary maps");
  resolve->add_flag("--symbolic", rs.symbolic,
                    "keep y-exponents as formal b symbols");
  add_format(resolve, rs, {"text", "json", "latex"});

  auto* betti = app.add_subcommand("betti", "Betti numbers of k (or of I)");
  add_generators(betti, bt);
  add_steps(betti, bt, 5, "homological steps");
  auto* opt_oracle = betti->add_flag(
      "--oracle", betti_oracle, "resolve degreewise over R instead of tensoring");
  auto* opt_ideal =
      betti->add_option("--ideal", betti_ideal,
                        "resolve the defining ideal over this presentation")
          ->check(CLI::IsMember({"q", "qmin"}));
  auto* opt_gr =
      betti->add_flag("--gr", betti_gr, "resolve k over the associated graded");
  opt_oracle->excludes(opt_ideal);
  opt_oracle->excludes(opt_gr);
  opt_ideal->excludes(opt_gr);
  add_degree_bound(betti, bt, "internal degree window for the oracle modes");
  add_field(betti, bt);
  add_format(betti, bt, {"text", "json"});

  auto* homology = app.add_subcommand("homology",
                                      "truncated exactness of the resolution");
  add_generators(homology, hm);
  add_steps(homology, hm, 1, "homological position to inspect");
  homology->add_flag("--cokernel", homology_cokernel,
                     "report coker of step 1 instead");
  add_degree_bound(homology, hm, "check degrees 0..N (default (d+2)*max Apery)");
  add_field(homology, hm);
  add_format(homology, hm, {"text", "json"});

  auto* m4c = app.add_subcommand("m4", "multiplicity-4 face and resolution");
  add_generators(m4c, m4a);
  m4c->add_option("--steps", m4a.steps,
                  "boundary maps of the minimal resolution (0: classify only)");
  m4c->add_flag("--symbolic", m4a.symbolic,
                "face-uniform matrices with formal b symbols");
  add_format(m4c, m4a, {"text", "json", "latex"});

  auto* golod = app.add_subcommand("golod", "compare against the Golod bound");
  add_generators(golod, gl);
  add_steps(golod, gl, 10, "compare series through this degree");
  golod->add_option("--piq", golod_piq,
                    "Betti polynomial of the defining ideal, comma-separated "
                    "coefficients");
  add_field(golod, gl);
  add_format(golod, gl, {"text", "json"});

  auto* grm = app.add_subcommand("grm", "associated graded ring at the "
                                        "maximal ideal");
  add_generators(grm, gr);
  add_degree_bound(grm, gr, "truncate the initial ideal here (default 6)");
  grm->add_option("--steps", gr.steps,
                  "also resolve k over gr through this step");
  add_field(grm, gr);
  add_format(grm, gr, {"text", "json"});

  auto* koszul = app.add_subcommand("koszul", "bounded linearity over gr");
  add_generators(koszul, ko);
  add_steps(koszul, ko, 3, "homological steps");
  add_degree_bound(koszul, ko, "standard-degree window (default 6)");
  add_field(koszul, ko);
  add_format(koszul, ko, {"text", "json"});

  std::vector<std::pair<CLI::App*, std::function<void()>>> handlers{
      {apery, [&] { cmd_apery(ap, out); }},
      {ideal, [&] { cmd_ideal(id, out); }},
      {kunz, [&] { cmd_kunz(kz, out); }},
      {same, [&] { cmd_same_face(sf_a, sf_b, sf_format, out); }},
      {resolve, [&] { cmd_resolve(rs, out); }},
      {betti, [&] { cmd_betti(bt, betti_oracle, betti_ideal, betti_gr, out); }},
      {homology, [&] { cmd_homology(hm, homology_cokernel, out); }},
      {m4c, [&] { cmd_m4(m4a, out); }},
      {golod, [&] { cmd_golod(gl, golod_piq, out); }},
      {grm, [&] { cmd_grm(gr, out); }},
      {koszul, [&] { cmd_koszul(ko, out); }},
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (const auto& [sub, fn] : handlers)
      if (sub->parsed()) fn();
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nsres::cli
