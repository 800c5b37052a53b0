#pragma once

#include <string>
#include <vector>

#include "nsres/apery.hpp"
#include "nsres/assoc_graded.hpp"
#include "nsres/kunz.hpp"
#include "nsres/matrix.hpp"
#include "nsres/ring.hpp"
#include "nsres/semigroup.hpp"
#include "nsres/series.hpp"

namespace nsres {

// Version tag stamped on every top-level JSON document the CLI prints.
inline constexpr const char* kJsonSchema = "nsres/1";

// JSON text: two-space indent, object keys sorted, numbers emitted as JSON
// integers while they fit in 64 bits and as decimal strings beyond that, so
// identical inputs give byte-identical output. Structural types round-trip
// through the matching *_from_json below; report types are emit-only.
std::string json_text(const NumericalSemigroup& S);
std::string json_text(const FaceSignature& sig);
std::string json_text(const KunzPoset& P);
std::string json_text(const BettiTable& B);
std::string json_text(const DifferentialMatrix& M);
std::string json_text(const SymbolicMatrix& M);
std::string json_text(const GrPresentation& P);
std::string json_text(const GolodReport& R);
std::string json_text(const HomologyReport& R);

NumericalSemigroup semigroup_from_json(const std::string& text);
FaceSignature signature_from_json(const std::string& text);
KunzPoset poset_from_json(const std::string& text);
BettiTable betti_from_json(const std::string& text);
// Rebuilds the matrix and replays its entries; a term whose recorded degree
// disagrees with the label difference is rejected (Error), so damaged
// fixtures fail loudly rather than parse into a different map.
DifferentialMatrix matrix_from_json(const std::string& text);
SymbolicMatrix symbolic_from_json(const std::string& text);

// Labeled block array: row labels down the left, source labels across the
// top, zero entries printed as dots. Concrete entries are monomials c t^n;
// symbolic entries keep their y-exponents as b_ij sums. A matrix with no
// rows and no columns collapses to an empty array environment.
std::string latex(const DifferentialMatrix& M);
std::string latex(const SymbolicMatrix& M);
std::string latex(const Monomial& mon, const std::vector<std::string>& names);
std::string latex(const Binomial& bin, const std::vector<std::string>& names);

// Hasse diagram of the Apery divisibility order: one node per residue
// class, one edge per cover relation, drawn bottom-up.
std::string dot(const KunzPoset& P);

}  // namespace nsres
