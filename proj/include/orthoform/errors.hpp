#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orthoform {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateLabel : Error {
  using Error::Error;
};

struct NonInvolutive : Error {
  using Error::Error;
};

struct SpaceMismatch : Error {
  using Error::Error;
};

// Thrown when an operation requires an orthogonal form.  The witness, when
// present, names a pair of canonical basis indices with disjoint orbit
// supports on which the form does not vanish.
struct NotOrthogonal : Error {
  explicit NotOrthogonal(const std::string& msg,
                         std::pair<int, int> witness = {-1, -1})
      : Error(msg), witness_basis(witness) {}
  std::pair<int, int> witness_basis;
};

struct NotSymmetric : Error {
  using Error::Error;
};

// Witness: indices of two domain basis elements with disjoint orbit supports
// whose images fail to be orthogonal.
struct NotOrthogonalityPreserving : Error {
  explicit NotOrthogonalityPreserving(const std::string& msg,
                                      std::pair<int, int> witness = {-1, -1})
      : Error(msg), witness_basis(witness) {}
  std::pair<int, int> witness_basis;
};

struct MultiOrbitSupport : NotOrthogonalityPreserving {
  using NotOrthogonalityPreserving::NotOrthogonalityPreserving;
};

struct InvalidStructure : Error {
  using Error::Error;
};

struct InvalidCertificate : Error {
  using Error::Error;
};

struct NotOPBijection : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

struct IncompatibleSpaces : Error {
  using Error::Error;
};

struct UnknownSuite : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace orthoform
