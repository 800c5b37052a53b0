#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nsres/apery.hpp"
#include "nsres/ring.hpp"

namespace nsres {

// Degreewise model of a connected graded algebra with finite dimensional
// pieces: basis enumeration plus structure constants. The resolution code
// below touches rings only through this interface, so the semigroup
// algebra, its polynomial presentations, and quotients such as the
// associated graded ring all resolve with the same sweep.
//
// Threading contract: dim(n) is called once from a single thread for every
// degree a computation will touch, before any concurrent multiply() calls;
// implementations may populate caches there and must be read-only after.
class GradedAlgebra {
 public:
  virtual ~GradedAlgebra() = default;

  virtual std::string name() const = 0;
  virtual unsigned long dim(const Int& n) const = 0;
  virtual std::string basis_text(const Int& n, unsigned long i) const = 0;

  // Elements of positive degree whose classes generate the irrelevant
  // ideal, as (degree, basis index) pairs. Products of these span every
  // positive-degree piece.
  virtual std::vector<std::pair<Int, unsigned long>> algebra_generators()
      const = 0;

  // Product (basis i of degree c) * (basis j of degree n), expressed over
  // the basis of degree c + n.
  virtual std::map<unsigned long, Rat> multiply(const Int& c, unsigned long i,
                                                const Int& n,
                                                unsigned long j) const = 0;
};

// Shared handle on a ring the oracle can resolve over.
class GradedRingHandle {
 public:
  // R = k[S] in the t^n basis: every piece has dimension 0 or 1.
  static GradedRingHandle semigroup_algebra(const NumericalSemigroup& S);
  // k[y, x_1..x_{m-1}] with the S-grading deg y = m, deg x_i = a_i.
  static GradedRingHandle apery_polynomial(const NumericalSemigroup& S);
  // One variable per minimal generator, graded by its value.
  static GradedRingHandle minimal_polynomial(const NumericalSemigroup& S);
  // k[x_1..x_n] with every variable in degree 1.
  static GradedRingHandle standard_polynomial(unsigned long nvars);
  // Caller-supplied algebra (the associated graded ring enters this way).
  static GradedRingHandle custom(std::shared_ptr<const GradedAlgebra> impl);

  const GradedAlgebra& algebra() const { return *impl_; }

 private:
  explicit GradedRingHandle(std::shared_ptr<const GradedAlgebra> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const GradedAlgebra> impl_;
};

// Degreewise spans of a graded submodule K of the rank-one free module A:
// span(n) lists vectors over the degree-n basis of A. Only consulted for
// 0 <= n <= N; must describe a submodule contained in positive degrees.
using DegreewiseSpan =
    std::function<std::vector<std::map<unsigned long, Rat>>(const Int&)>;

struct ResolutionStep {
  // Chosen minimal generators in ascending degree order.
  std::vector<Int> degrees;
  // Column j expresses generator j inside the previous free module, keyed
  // by (previous generator index, ring basis index in the complementary
  // degree). Step 0 columns live in the ambient ring (index 0, degree 0).
  std::vector<std::map<std::pair<size_t, unsigned long>, Rat>> columns;
};

struct GradedResolution {
  // steps[0] presents the module, steps[i] its i-th syzygies.
  std::vector<ResolutionStep> steps;
  // values/graded indexed by step; s_degree_bound records the sweep window.
  BettiTable betti;
};

// Minimal graded resolution of the submodule described by `span`, through
// homological step i_max, complete in internal degrees <= N. Generators
// are extracted per degree by exact elimination: kernel vectors
// independent modulo (irrelevant ideal) * (generators already chosen).
// Throws DegreeBoundTooLowError when a minimal generator lands within one
// algebra-generator degree of N, since syzygies above it would start
// beyond the window and the Betti totals could not be trusted.
GradedResolution resolve_submodule(const GradedRingHandle& ring,
                                   const DegreewiseSpan& span,
                                   unsigned long i_max, const Int& N,
                                   const FieldChoice& field = FieldChoice::rat());

// Minimal resolution of the residue field k = A / A_+. Step 0 is the rank
// one free cover; its kernel, the irrelevant ideal, seeds the sweep, so
// betti.values = 1, beta_1, ..., beta_{i_max}.
GradedResolution resolve_residue_field(const GradedRingHandle& ring,
                                       unsigned long i_max, const Int& N,
                                       const FieldChoice& field = FieldChoice::rat());

// The defining toric ideal of the chosen polynomial presentation (Q or
// Qmin), resolved as a module. Its degree-n piece is the kernel of
// evaluation onto t^n, i.e. the coefficient-sum-zero hyperplane of the
// monomial basis, so no generating set needs to be supplied: this is the
// independent check on everything built from explicit binomials.
GradedResolution resolve_defining_ideal(const NumericalSemigroup& S,
                                        GradedKind kind, unsigned long i_max,
                                        const Int& N,
                                        const FieldChoice& field = FieldChoice::rat());

// Betti numbers of k over R = k[S] with a certified window: step i of any
// minimal resolution lives in degrees <= i * max(Ap), so the default bound
// (i_max + 1) * max(Ap) makes the totals complete, not just truncated.
BettiTable oracle_betti_k(const NumericalSemigroup& S, unsigned long i_max,
                          const FieldChoice& field = FieldChoice::rat());

// Betti numbers of the defining ideal over Q or Qmin with the default
// window below.
BettiTable oracle_betti_ideal(const NumericalSemigroup& S, GradedKind kind,
                              unsigned long i_max,
                              const FieldChoice& field = FieldChoice::rat());

Int default_k_bound(const NumericalSemigroup& S, unsigned long i_max);

// Generous window for ideal resolutions: the sum of all canonical
// generator degrees (a_i + a_j over classes) plus one generator of slack.
// Not a certificate; the sweep still throws if the resolution stays
// active near the bound.
Int default_ideal_bound(const NumericalSemigroup& S);

}  // namespace nsres
