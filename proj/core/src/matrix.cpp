#include "nsres/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace nsres {

std::string GenLabel::text() const {
  std::ostringstream os;
  switch (kind) {
    case LabelKind::Word:
    case LabelKind::Multiset: {
      os << (kind == LabelKind::Word ? "e" : "f");
      if (data.empty()) break;
      os << "_";
      bool compact =
          std::all_of(data.begin(), data.end(), [](unsigned long l) { return l < 10; });
      for (size_t i = 0; i < data.size(); ++i) {
        if (!compact && i) os << ",";
        os << data[i];
      }
      break;
    }
    case LabelKind::Generator:
      os << "g" << (data.empty() ? 0 : data[0]) << "[" << degree.get_str()
         << "]";
      break;
  }
  return os.str();
}

GenLabel word_label(std::vector<unsigned long> letters, Int degree) {
  return GenLabel{LabelKind::Word, std::move(letters), std::move(degree)};
}

GenLabel multiset_label(std::vector<unsigned long> letters, Int degree) {
  return GenLabel{LabelKind::Multiset, std::move(letters), std::move(degree)};
}

GenLabel generator_label(unsigned long index, Int degree) {
  return GenLabel{LabelKind::Generator, {index}, std::move(degree)};
}

DifferentialMatrix::DifferentialMatrix(NumericalSemigroup S,
                                       std::vector<GenLabel> target,
                                       std::vector<GenLabel> source)
    : S_(std::move(S)), target_(std::move(target)), source_(std::move(source)) {}

Int DifferentialMatrix::entry_degree(size_t row, size_t col) const {
  return source_.at(col).degree - target_.at(row).degree;
}

void DifferentialMatrix::add_term(size_t row, size_t col, const Rat& coef) {
  if (coef == 0) return;
  if (row >= target_.size() || col >= source_.size())
    throw InternalInvariantError("add_term: index out of range");
  Int delta = entry_degree(row, col);
  if (delta < 0 || !S_.contains(delta)) {
    std::ostringstream os;
    os << "add_term: entry degree " << delta.get_str() << " at ("
       << target_[row].text() << ", " << source_[col].text()
       << ") lies outside the semigroup";
    throw InternalInvariantError(os.str());
  }
  auto key = std::make_pair(row, col);
  auto [it, inserted] = entries_.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) entries_.erase(it);
  }
}

const Rat* DifferentialMatrix::entry(size_t row, size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? nullptr : &it->second;
}

RingElement DifferentialMatrix::entry_element(size_t row, size_t col) const {
  const Rat* c = entry(row, col);
  if (!c) return RingElement();
  return RingElement::term(entry_degree(row, col), *c);
}

bool DifferentialMatrix::has_unit_entry() const {
  for (const auto& [pos, c] : entries_) {
    (void)c;
    if (entry_degree(pos.first, pos.second) == 0) return true;
  }
  return false;
}

DifferentialMatrix compose(const DifferentialMatrix& A,
                           const DifferentialMatrix& B) {
  if (A.source() != B.target())
    throw InternalInvariantError("compose: inner bases differ");
  DifferentialMatrix C(A.semigroup(), A.target(), B.source());
  // Group A's entries by column once, then walk B's entries.
  std::map<size_t, std::vector<std::pair<size_t, Rat>>> a_by_col;
  for (const auto& [pos, c] : A.entries())
    a_by_col[pos.second].push_back({pos.first, c});
  for (const auto& [pos, cb] : B.entries()) {
    auto it = a_by_col.find(pos.first);
    if (it == a_by_col.end()) continue;
    for (const auto& [row, ca] : it->second)
      C.add_term(row, pos.second, ca * cb);
  }
  return C;
}

std::vector<size_t> alive_in_degree(const std::vector<GenLabel>& basis,
                                    const NumericalSemigroup& S,
                                    const Int& n) {
  std::vector<size_t> out;
  for (size_t i = 0; i < basis.size(); ++i)
    if (S.contains(n - basis[i].degree)) out.push_back(i);
  return out;
}

SymbolicExponent b_symbol(unsigned long i, unsigned long j) {
  if (i > j) std::swap(i, j);
  SymbolicExponent e;
  e.b[{i, j}] = 1;
  return e;
}

SymbolicExponent constant_exponent(const Int& c) {
  SymbolicExponent e;
  e.constant = c;
  return e;
}

SymbolicExponent SymbolicExponent::plus(const SymbolicExponent& other) const {
  SymbolicExponent out = *this;
  out.constant += other.constant;
  for (const auto& [ij, k] : other.b) out.b[ij] += k;
  return out;
}

Int SymbolicExponent::eval(const BMatrix& B) const {
  Int total = constant;
  for (const auto& [ij, k] : b) total += Int(k) * B.at(ij.first, ij.second);
  return total;
}

std::string SymbolicExponent::text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, k] : b) {
    if (k == 0) continue;
    if (!first) os << "+";
    if (k > 1) os << k << " ";
    os << "b_" << ij.first << ij.second;
    first = false;
  }
  if (constant != 0) {
    if (!first) os << "+";
    os << constant.get_str();
  }
  return os.str();
}

std::string SymbolicTerm::text() const {
  std::ostringstream os;
  if (coef == -1)
    os << "-";
  else if (coef != 1)
    os << coef.get_str() << " ";
  bool printed = false;
  if (!yexp.is_zero()) {
    bool bare = yexp.b.empty() && yexp.constant == 1;
    os << "y";
    if (!bare) os << "^{" << yexp.text() << "}";
    printed = true;
  }
  for (size_t i = 0; i < xexp.size(); ++i) {
    if (xexp[i] == 0) continue;
    if (printed) os << " ";
    os << "x_" << i;
    if (xexp[i] > 1) os << "^" << xexp[i];
    printed = true;
  }
  if (!printed) os << "1";
  return os.str();
}

DifferentialMatrix substitute(const SymbolicMatrix& M,
                              const NumericalSemigroup& T) {
  if (T.multiplicity() != M.m) {
    std::ostringstream os;
    os << "substitute: multiplicity of " << to_string(T) << " is not " << M.m;
    throw FaceMismatchError(os.str());
  }
  BMatrix B(T);
  // Homogeneity below cannot always see a wrong face: a matrix whose
  // exponents are single b symbols stays degreewise consistent everywhere.
  // A minimized matrix records its face, so check it outright.
  if (M.face && face_signature(B) != *M.face) {
    std::ostringstream os;
    os << "substitute: " << to_string(T)
       << " lies on a different face than the matrix was minimized for";
    throw FaceMismatchError(os.str());
  }
  auto concretize = [&](const std::vector<GenLabel>& labels) {
    std::vector<GenLabel> out;
    out.reserve(labels.size());
    for (const GenLabel& l : labels) {
      GenLabel c = l;
      Int deg = 0;
      for (unsigned long letter : l.data) deg += T.apery_value(letter);
      c.degree = deg;
      out.push_back(std::move(c));
    }
    return out;
  };
  DifferentialMatrix out(T, concretize(M.target), concretize(M.source));
  for (const auto& [pos, term] : M.entries) {
    Int degree = Int(T.multiplicity()) * term.yexp.eval(B);
    for (size_t i = 0; i < term.xexp.size(); ++i)
      degree += Int(term.xexp[i]) * T.apery_value(static_cast<unsigned long>(i));
    if (degree != out.entry_degree(pos.first, pos.second)) {
      std::ostringstream os;
      os << "substitute: entry (" << M.target[pos.first].text() << ", "
         << M.source[pos.second].text() << ") loses homogeneity at "
         << to_string(T) << "; the semigroup lies outside the matrix's face";
      throw FaceMismatchError(os.str());
    }
    out.add_term(pos.first, pos.second, term.coef);
  }
  return out;
}

}  // namespace nsres
