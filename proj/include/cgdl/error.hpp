#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgdl {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: formulas, programs, JSON documents, lattice flags.
/// `offset` is the 0-based byte position of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// A syntactically valid document with the wrong structure, e.g. a model
/// file with a missing key or a value of the wrong type.
class FormatError : public Error {
public:
  using Error::Error;
};

/// Well-formed input that refers to something the model does not declare,
/// or uses an operator the chosen semantics does not support.
class SemanticError : public Error {
public:
  using Error::Error;
};

/// Arity mismatches and values outside a lattice carrier.
class LatticeError : public Error {
public:
  using Error::Error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

} // namespace cgdl
