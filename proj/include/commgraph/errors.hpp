#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace commgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group specification could not be parsed. `token()` holds the offending piece.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token)
      : Error(message), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Operands do not fit together (length mismatch, wrong group, size mismatch, index out of range).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// (n, r) does not describe a non-abelian generalized dihedral group.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// G is an elementary abelian 2-group, so D(G) is abelian and has no Omega partition.
class ElementaryAbelian2Error : public InvalidParameters {
 public:
  using InvalidParameters::InvalidParameters;
};

/// An exact oracle was asked to run on a graph larger than its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

}  // namespace commgraph
