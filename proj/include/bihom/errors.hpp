#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bihom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct SingularMap : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct NotMultiplicative : Error { using Error::Error; };
struct NotCommuting : Error { using Error::Error; };
struct NotMorphism : Error { using Error::Error; };
struct NotEndomorphism : NotMorphism { using NotMorphism::NotMorphism; };
struct BadParameter : Error { using Error::Error; };
struct UnknownIdentity : Error { using Error::Error; };

// Thrown by structure constructors when a type invariant fails
// (non-skew bracket, broken Akivis identity, ...).
struct InvalidStructure : Error { using Error::Error; };

// Document-level errors carry the location they refer to.
struct IoError : Error {
  IoError(const std::string& what, std::string where)
      : Error(what + " (at " + where + ")"), location(std::move(where)) {}
  std::string location;
};
struct SyntaxError : IoError { using IoError::IoError; };
struct SchemaError : IoError { using IoError::IoError; };
struct InvariantError : IoError { using IoError::IoError; };

}  // namespace bihom
