#pragma once

#include <string>
#include <vector>

#include "nsres/apery.hpp"

namespace nsres {

// Faces of the multiplicity-4 Kunz cone that contain numerical semigroups,
// up to the Z_4^* relabeling: the interior, the ray a_2 = 2a_1, a_3 = 3a_1,
// the facet a_3 = a_1 + a_2 (complete intersections), and the facet
// a_2 = 2a_1 (which are not).
enum class FaceTagM4 { Interior, Ray, CIFacet, NonCIFacet };

std::string to_string(FaceTagM4 tag);

struct FaceClassM4 {
  FaceTagM4 tag = FaceTagM4::Interior;
  // Relabeling i -> unit*i mod 4 carries the face of S onto the reference
  // orientation above; 1 or 3, and 1 whenever the face is its own mirror.
  unsigned long unit = 1;

  friend bool operator==(const FaceClassM4&, const FaceClassM4&) = default;
};

// Throws NotMultiplicityFourError unless the multiplicity is 4.
FaceClassM4 classify_face_m4(const NumericalSemigroup& S);

// Minimal resolution of k over <4, a>: rank-2 matrices repeating with
// period two after the first step. Throws WrongFaceError off the ray.
std::vector<DifferentialMatrix> ray_resolution(const NumericalSemigroup& S,
                                               unsigned long D);
SymbolicMatrix ray_symbolic(const NumericalSemigroup& S, unsigned long d);

// Step d of the minimal resolution on the complete intersection facet.
// Basis vectors are multisets over {0,1,2} of size d with at most one 0,
// so the rank is 2d+1. Throws WrongFaceError elsewhere.
DifferentialMatrix ci_differential(const NumericalSemigroup& S,
                                   unsigned long d);
SymbolicMatrix ci_symbolic(const NumericalSemigroup& S, unsigned long d);

// Words with first letter in {0,1,3} and each later letter in {2,3} after
// a 1 and in {1,3} otherwise; they index the minimized resolution on the
// other facet. language_words lists all 3 * 2^(d-1) of them in
// lexicographic order.
bool is_language_word(const Word& w);
std::vector<Word> language_words(unsigned long d);

// Minimized resolution on the facet a_2 = 2a_1, obtained from the full
// resolution of k by eliminating the summands outside the word language.
// Throws WrongFaceError elsewhere and ReductionFailureError if the
// elimination leaves a nonzero remainder (an internal bug, not bad input).
std::vector<DifferentialMatrix> nonci_resolution(const NumericalSemigroup& S,
                                                 unsigned long D);
SymbolicMatrix nonci_symbolic(const NumericalSemigroup& S, unsigned long d);

// Minimal resolution d_1 .. d_D for any multiplicity-4 semigroup,
// dispatching on the face; in the interior this is the Apery resolution.
std::vector<DifferentialMatrix> m4_resolution(const NumericalSemigroup& S,
                                              unsigned long D);

}  // namespace nsres
