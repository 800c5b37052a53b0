#pragma once

#include <stdexcept>
#include <string>

namespace nsres {

// Base for all domain errors. The CLI maps these to exit code 1; genuine
// usage mistakes (bad flags, unparsable arguments) exit 2 instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Generators with gcd != 1 span a proper subgroup, not a numerical semigroup.
class GcdNotOneError : public Error {
 public:
  explicit GcdNotOneError(const std::string& what) : Error(what) {}
};

class LengthMismatchError : public Error {
 public:
  explicit LengthMismatchError(const std::string& what) : Error(what) {}
};

// A structural property the algorithms rely on failed to hold. Seeing this
// means a bug, not bad input.
class InternalInvariantError : public Error {
 public:
  explicit InternalInvariantError(const std::string& what) : Error(what) {}
};

// Symbolic specialization was asked to land on a semigroup whose face
// signature differs from the one the symbolic data was built on.
class FaceMismatchError : public Error {
 public:
  explicit FaceMismatchError(const std::string& what) : Error(what) {}
};

class NotMultiplicityFourError : public Error {
 public:
  explicit NotMultiplicityFourError(const std::string& what) : Error(what) {}
};

// A multiplicity-4 construction was requested on the wrong face.
class WrongFaceError : public Error {
 public:
  explicit WrongFaceError(const std::string& what) : Error(what) {}
};

// Division-with-remainder against the small complex left a nonzero
// remainder while lifting. On the intended face every lift divides
// exactly, so reaching this signals a wrong input face or a bug.
class ReductionFailureError : public Error {
 public:
  explicit ReductionFailureError(const std::string& what) : Error(what) {}
};

// A degreewise computation hit its truncation bound while new syzygies were
// still appearing, so results past the bound would be untrustworthy.
class DegreeBoundTooLowError : public Error {
 public:
  explicit DegreeBoundTooLowError(const std::string& what) : Error(what) {}
};

class MissingPIQError : public Error {
 public:
  explicit MissingPIQError(const std::string& what) : Error(what) {}
};

class ZeroPolynomialError : public Error {
 public:
  explicit ZeroPolynomialError(const std::string& what) : Error(what) {}
};

}  // namespace nsres
