#include "nsres/ring.hpp"

#include <sstream>

namespace nsres {

Monomial Monomial::times(const Monomial& other) const {
  if (e.size() != other.e.size())
    throw LengthMismatchError("monomial product: variable counts differ");
  Monomial out = *this;
  for (size_t i = 0; i < e.size(); ++i) out.e[i] += other.e[i];
  return out;
}

unsigned long Monomial::total_degree() const {
  unsigned long t = 0;
  for (unsigned long k : e) t += k;
  return t;
}

Int s_degree(const Monomial& mon, const NumericalSemigroup& S) {
  if (mon.e.size() != S.multiplicity())
    throw LengthMismatchError("s_degree: exponent count != multiplicity");
  Int total = 0;
  for (size_t i = 0; i < mon.e.size(); ++i)
    total += Int(mon.e[i]) * S.apery_value(static_cast<unsigned long>(i));
  return total;
}

Int weighted_degree(const Monomial& mon, const std::vector<Int>& degrees) {
  if (mon.e.size() != degrees.size())
    throw LengthMismatchError("weighted_degree: exponent count != degrees");
  Int total = 0;
  for (size_t i = 0; i < mon.e.size(); ++i)
    total += Int(mon.e[i]) * degrees[i];
  return total;
}

RingElement RingElement::term(const Int& degree, const Rat& coef) {
  RingElement f;
  f.add_term(degree, coef);
  return f;
}

RingElement& RingElement::add_term(const Int& degree, const Rat& coef) {
  if (coef == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(degree, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  RingElement out = a;
  for (const auto& [deg, c] : b.terms_) out.add_term(deg, c);
  return out;
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  RingElement out = a;
  for (const auto& [deg, c] : b.terms_) out.add_term(deg, -c);
  return out;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement out;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) out.add_term(da + db, ca * cb);
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out;
  for (const auto& [deg, c] : terms_) out.terms_.emplace(deg, -c);
  return out;
}

RingElement RingElement::scaled(const Rat& c) const {
  RingElement out;
  if (c == 0) return out;
  for (const auto& [deg, coef] : terms_) out.terms_.emplace(deg, coef * c);
  return out;
}

RingElement normal_form(const std::vector<std::pair<Rat, Monomial>>& poly,
                        const NumericalSemigroup& S) {
  RingElement out;
  for (const auto& [coef, mon] : poly) out.add_term(s_degree(mon, S), coef);
  return out;
}

std::vector<Binomial> toric_generators(const NumericalSemigroup& S) {
  unsigned long m = S.multiplicity();
  BMatrix B(S);
  std::vector<Binomial> out;
  for (unsigned long i = 1; i < m; ++i)
    for (unsigned long j = i; j < m; ++j) {
      Monomial lhs = Monomial::one(m);
      lhs.e[i] += 1;
      lhs.e[j] += 1;
      Monomial rhs = Monomial::one(m);
      unsigned long target = (i + j) % m;
      unsigned long b = to_ulong(B.at(i, j));
      if (target == 0) {
        rhs.e[0] = b + 1;
      } else {
        rhs.e[0] = b;
        rhs.e[target] = 1;
      }
      out.push_back(Binomial{std::move(lhs), std::move(rhs)});
    }
  return out;
}

namespace {

void enumerate(const std::vector<Int>& degrees, size_t i, const Int& left,
               Monomial& partial, std::vector<Monomial>& out) {
  if (i + 1 == degrees.size()) {
    Int q = left / degrees[i];
    if (q * degrees[i] == left) {
      partial.e[i] = to_ulong(q);
      out.push_back(partial);
      partial.e[i] = 0;
    }
    return;
  }
  for (Int k = 0; k * degrees[i] <= left; ++k) {
    partial.e[i] = to_ulong(k);
    enumerate(degrees, i + 1, left - k * degrees[i], partial, out);
  }
  partial.e[i] = 0;
}

}  // namespace

std::vector<Monomial> graded_monomials(const std::vector<Int>& degrees,
                                       const Int& n) {
  for (const Int& d : degrees)
    if (d <= 0) throw Error("graded_monomials: degrees must be positive");
  if (n < 0) return {};
  std::vector<Monomial> out;
  Monomial partial = Monomial::one(degrees.size());
  if (degrees.empty()) {
    if (n == 0) out.push_back(partial);
    return out;
  }
  enumerate(degrees, 0, n, partial, out);
  return out;
}

std::vector<Int> variable_degrees(GradedKind kind,
                                  const NumericalSemigroup& S) {
  switch (kind) {
    case GradedKind::R:
      return {Int(1)};
    case GradedKind::Q: {
      std::vector<Int> degs{Int(S.multiplicity())};
      for (const Int& a : S.apery_tail()) degs.push_back(a);
      return degs;
    }
    case GradedKind::Qmin: {
      std::vector<Int> degs;
      for (unsigned long g : S.minimal_generators()) degs.push_back(Int(g));
      return degs;
    }
  }
  throw InternalInvariantError("variable_degrees: bad kind");
}

std::vector<Monomial> graded_basis(GradedKind kind,
                                   const NumericalSemigroup& S, const Int& n) {
  if (n < 0) return {};
  if (kind == GradedKind::R) {
    if (!S.contains(n)) return {};
    return {Monomial{{to_ulong(n)}}};
  }
  return graded_monomials(variable_degrees(kind, S), n);
}

std::vector<std::string> variable_names(GradedKind kind,
                                        const NumericalSemigroup& S) {
  switch (kind) {
    case GradedKind::R:
      return {"t"};
    case GradedKind::Q: {
      std::vector<std::string> names{"y"};
      for (unsigned long i = 1; i < S.multiplicity(); ++i)
        names.push_back("x_" + std::to_string(i));
      return names;
    }
    case GradedKind::Qmin: {
      std::vector<std::string> names;
      for (unsigned long g : S.minimal_generators())
        names.push_back("u_" + std::to_string(g));
      return names;
    }
  }
  throw InternalInvariantError("variable_names: bad kind");
}

std::string render(const Monomial& mon,
                   const std::vector<std::string>& names) {
  if (mon.e.size() != names.size())
    throw LengthMismatchError("render: name count != exponent count");
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < mon.e.size(); ++i) {
    if (mon.e[i] == 0) continue;
    if (any) os << " ";
    os << names[i];
    if (mon.e[i] > 1) os << "^" << mon.e[i];
    any = true;
  }
  if (!any) return "1";
  return os.str();
}

std::string render(const Binomial& bin,
                   const std::vector<std::string>& names) {
  return render(bin.lhs, names) + " - " + render(bin.rhs, names);
}

std::string render(const RingElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [deg, coef] = *it;
    Rat abs = coef < 0 ? Rat(-coef) : coef;
    if (first) {
      if (coef < 0) os << "-";
      first = false;
    } else {
      os << (coef < 0 ? " - " : " + ");
    }
    if (abs != 1 || deg == 0) {
      os << abs.get_str();
      if (deg != 0) os << " ";
    }
    if (deg != 0) os << "t^" << deg.get_str();
  }
  return os.str();
}

}  // namespace nsres
