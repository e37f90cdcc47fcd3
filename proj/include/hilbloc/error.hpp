#pragma once

#include <stdexcept>

namespace hilbloc {

/// Invalid input or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not. Always a bug (or a falsified
/// ansatz), never a user mistake.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace hilbloc
