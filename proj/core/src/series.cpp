#include "nsres/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "nsres/apery.hpp"
#include "nsres/errors.hpp"
#include "nsres/m4.hpp"
#include "nsres/numeric.hpp"

namespace nsres {

namespace {

std::vector<Int> stripped(std::vector<Int> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  if (v.empty()) v.push_back(Int(0));
  return v;
}

std::string poly_text(const std::vector<Int>& c) {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Int a = c[k];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a);
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Int> coefficients)
    : coef_(std::move(coefficients)) {
  if (coef_.empty())
    throw Error("TruncatedSeries: at least one coefficient is required");
}

TruncatedSeries TruncatedSeries::zero(unsigned long bound) {
  return TruncatedSeries(std::vector<Int>(bound + 1, Int(0)));
}

TruncatedSeries TruncatedSeries::one(unsigned long bound) {
  std::vector<Int> c(bound + 1, Int(0));
  c[0] = 1;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::z(unsigned long bound) {
  std::vector<Int> c(bound + 1, Int(0));
  if (bound >= 1) c[1] = 1;
  return TruncatedSeries(std::move(c));
}

const Int& TruncatedSeries::operator[](unsigned long i) const {
  if (i >= coef_.size()) {
    std::ostringstream os;
    os << "TruncatedSeries: coefficient " << i << " lies beyond the bound "
       << bound();
    throw Error(os.str());
  }
  return coef_[i];
}

TruncatedSeries TruncatedSeries::truncated(unsigned long D) const {
  if (D > bound()) {
    std::ostringstream os;
    os << "TruncatedSeries: cannot widen the bound " << bound() << " to " << D
       << " without new information; padded() asserts the series is a "
          "polynomial";
    throw Error(os.str());
  }
  std::vector<Int> c(coef_.begin(), coef_.begin() + (D + 1));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::padded(unsigned long D) const {
  std::vector<Int> c = coef_;
  c.resize(D + 1, Int(0));
  return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::agrees_through(const TruncatedSeries& other,
                                     unsigned long D) const {
  if (D > bound() || D > other.bound()) {
    std::ostringstream os;
    os << "TruncatedSeries: cannot compare through z^" << D
       << " with bounds " << bound() << " and " << other.bound();
    throw Error(os.str());
  }
  for (unsigned long k = 0; k <= D; ++k)
    if (coef_[k] != other.coef_[k]) return false;
  return true;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned long B = std::min(a.bound(), b.bound());
  std::vector<Int> c(B + 1);
  for (unsigned long k = 0; k <= B; ++k) c[k] = a.coef_[k] + b.coef_[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned long B = std::min(a.bound(), b.bound());
  std::vector<Int> c(B + 1);
  for (unsigned long k = 0; k <= B; ++k) c[k] = a.coef_[k] - b.coef_[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned long B = std::min(a.bound(), b.bound());
  std::vector<Int> c(B + 1, Int(0));
  for (unsigned long i = 0; i <= B; ++i) {
    if (a.coef_[i] == 0) continue;
    for (unsigned long j = 0; i + j <= B; ++j)
      c[i + j] += a.coef_[i] * b.coef_[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::scaled(const Int& c) const {
  std::vector<Int> out = coef_;
  for (Int& v : out) v *= c;
  return TruncatedSeries(std::move(out));
}

std::string TruncatedSeries::text() const { return poly_text(coef_); }

TruncatedSeries pow(const TruncatedSeries& base, unsigned long e) {
  TruncatedSeries out = TruncatedSeries::one(base.bound());
  for (unsigned long i = 0; i < e; ++i) out = out * base;
  return out;
}

RationalSeries::RationalSeries(std::vector<Int> numerator,
                               std::vector<Int> denominator)
    : num(stripped(std::move(numerator))),
      den(stripped(std::move(denominator))) {
  if (den.size() == 1 && den[0] == 0)
    throw ZeroPolynomialError("RationalSeries: denominator is zero");
  if (den[0] != 1 && den[0] != -1) {
    std::ostringstream os;
    os << "RationalSeries: integral expansion needs denominator constant "
          "term +1 or -1, got "
       << to_string(den[0]);
    throw Error(os.str());
  }
}

TruncatedSeries RationalSeries::expand(unsigned long D) const {
  std::vector<Int> c(D + 1, Int(0));
  for (unsigned long k = 0; k <= D; ++k) {
    Int s = k < num.size() ? num[k] : Int(0);
    for (unsigned long i = 1; i < den.size() && i <= k; ++i)
      s -= den[i] * c[k - i];
    // den[0] is a unit, so dividing by it is multiplying by it.
    c[k] = s * den[0];
  }
  return TruncatedSeries(std::move(c));
}

std::string RationalSeries::text() const {
  return "(" + poly_text(num) + ") / (" + poly_text(den) + ")";
}

RationalSeries med_poincare(unsigned long m) {
  if (m == 0) throw Error("med_poincare: multiplicity must be positive");
  return RationalSeries({Int(1), Int(1)}, {Int(1), Int(1) - Int(m)});
}

TruncatedSeries med_PIQ(unsigned long m) {
  if (m == 0) throw Error("med_PIQ: multiplicity must be positive");
  std::vector<Int> c;
  for (unsigned long i = 0; i + 2 <= m; ++i)
    c.push_back(Int(i + 1) * binomial(m, i + 2));
  return TruncatedSeries(stripped(std::move(c)));
}

namespace {

// Compares a closed form against the tensor computation on a short prefix.
// A closed form that disagrees with the direct calculation means the branch
// dispatch is wrong, and silently returning either value would be worse
// than stopping.
void cross_check(const NumericalSemigroup& S, const std::vector<Int>& closed,
                 unsigned long depth, const FieldChoice& field) {
  const BettiTable direct = betti_via_tensor(S, depth, field);
  for (unsigned long d = 0; d <= depth; ++d) {
    if (direct.values[d] == closed[d]) continue;
    std::ostringstream os;
    os << "poincare_truncated: closed form gives " << to_string(closed[d])
       << " in step " << d << " but the tensor computation gives "
       << to_string(direct.values[d]);
    throw InternalInvariantError(os.str());
  }
}

}  // namespace

TruncatedSeries poincare_truncated(const NumericalSemigroup& S,
                                   unsigned long D,
                                   const FieldChoice& field) {
  const unsigned long m = S.multiplicity();
  if (S.is_med()) {
    std::vector<Int> c(D + 1);
    c[0] = 1;
    Int v(m);
    for (unsigned long d = 1; d <= D; ++d) {
      c[d] = v;
      v *= m - 1;
    }
    cross_check(S, c, std::min<unsigned long>(D, 3), field);
    return TruncatedSeries(std::move(c));
  }
  if (m == 4) {
    const FaceClassM4 face = classify_face_m4(S);
    std::vector<Int> c(D + 1);
    c[0] = 1;
    for (unsigned long d = 1; d <= D; ++d) {
      switch (face.tag) {
        case FaceTagM4::Ray:
          c[d] = 2;
          break;
        case FaceTagM4::CIFacet:
          c[d] = 2 * d + 1;
          break;
        case FaceTagM4::NonCIFacet:
          c[d] = Int(3) << (d - 1);
          break;
        case FaceTagM4::Interior:
          throw InternalInvariantError(
              "poincare_truncated: interior face should have been handled "
              "as maximal embedding dimension");
      }
    }
    cross_check(S, c, std::min<unsigned long>(D, 4), field);
    return TruncatedSeries(std::move(c));
  }
  return TruncatedSeries(betti_via_tensor(S, D, field).values);
}

namespace {

struct PiqChoice {
  TruncatedSeries piq;
  std::string source;
};

PiqChoice choose_piq(const NumericalSemigroup& S, bool use_oracle,
                     const FieldChoice& field) {
  const unsigned long m = S.multiplicity();
  if (S.is_med()) return {med_PIQ(m), "med formula"};
  const std::vector<unsigned long> gens = S.minimal_generators();
  if (gens.size() == 2)
    return {TruncatedSeries({Int(1)}), "embedding dimension 2"};
  if (m == 4) {
    const FaceClassM4 face = classify_face_m4(S);
    switch (face.tag) {
      case FaceTagM4::CIFacet:
        return {TruncatedSeries({Int(2), Int(1)}), "multiplicity-4 face"};
      case FaceTagM4::NonCIFacet:
        return {TruncatedSeries({Int(3), Int(2)}), "multiplicity-4 face"};
      case FaceTagM4::Interior:
      case FaceTagM4::Ray:
        throw InternalInvariantError(
            "default_piq: interior and ray cases should have been handled "
            "by the med and two-generator branches");
    }
  }
  if (!use_oracle)
    throw MissingPIQError(
        "no closed form for the Betti polynomial of the defining ideal "
        "here; pass it explicitly or enable the syzygy oracle");
  // The quotient by the ideal is a one-dimensional Cohen-Macaulay ring, so
  // the ideal's projective dimension is gens.size() - 2; one extra step
  // double-checks that the resolution really stops.
  const BettiTable t = oracle_betti_ideal(S, GradedKind::Qmin,
                                          gens.size() - 1, field);
  return {TruncatedSeries(stripped(t.values)), "oracle"};
}

}  // namespace

TruncatedSeries default_piq(const NumericalSemigroup& S, bool use_oracle,
                            const FieldChoice& field) {
  return choose_piq(S, use_oracle, field).piq;
}

GolodReport golod_report(const NumericalSemigroup& S, unsigned long D,
                         std::optional<TruncatedSeries> piq,
                         const FieldChoice& field) {
  GolodReport rep;
  rep.generators = S.minimal_generators().size();
  if (piq) {
    rep.piq = std::move(*piq);
    rep.piq_source = "supplied";
  } else {
    PiqChoice choice = choose_piq(S, true, field);
    rep.piq = std::move(choice.piq);
    rep.piq_source = std::move(choice.source);
  }

  std::vector<Int> num;
  for (unsigned long k = 0; k <= rep.generators; ++k)
    num.push_back(binomial(rep.generators, k));
  std::vector<Int> den(rep.piq.bound() + 3, Int(0));
  den[0] = 1;
  for (unsigned long k = 0; k <= rep.piq.bound(); ++k)
    den[k + 2] = -rep.piq[k];

  rep.rhs = RationalSeries(std::move(num), std::move(den)).expand(D);
  rep.lhs = poincare_truncated(S, D, field);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

bool golod_check(const NumericalSemigroup& S, unsigned long D,
                 std::optional<TruncatedSeries> piq,
                 const FieldChoice& field) {
  return golod_report(S, D, std::move(piq), field).equal;
}

}  // namespace nsres
