#pragma once

#include <stdexcept>
#include <string>

namespace mtl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter outside the basis alphabet was encountered.
class AlphabetError : public Error {
 public:
  AlphabetError(char letter, std::size_t position)
      : Error("unknown letter '" + std::string(1, letter) + "' at position " +
              std::to_string(position)),
        letter_(letter),
        position_(position) {}

  char letter() const noexcept { return letter_; }
  std::size_t position() const noexcept { return position_; }

 private:
  char letter_;
  std::size_t position_;
};

/// An operation was asked for with an incomplete configuration (e.g. a tree
/// length without a splitting).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A splitting is not exactly preserved by the automorphism, or the stable
/// letter image is not of the required shape.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// A subgroup that must be invariant under the automorphism is not.
class InvarianceError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget.
class BoundedFailure : public Error {
 public:
  using Error::Error;
};

/// Internal inconsistency between computed objects (e.g. two preserved
/// peripheral entries in one free factor).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mtl
