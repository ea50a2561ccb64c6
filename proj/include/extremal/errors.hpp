#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedAlgebraError : Error {
  explicit UnsupportedAlgebraError(const std::string& w) : Error("unsupported algebra: " + w) {}
};

struct UnknownRootError : Error {
  explicit UnknownRootError(const std::string& w) : Error("unknown root: " + w) {}
};

struct UnknownSymbolError : Error {
  explicit UnknownSymbolError(const std::string& w) : Error("unknown symbol: " + w) {}
};

struct NotAPermutationError : Error {
  explicit NotAPermutationError(const std::string& w)
      : Error("not a permutation of the reduced positive system: " + w) {}
};

struct TooLargeError : Error {
  explicit TooLargeError(const std::string& w) : Error("too large: " + w) {}
};

struct OrderingMismatchError : Error {
  explicit OrderingMismatchError(const std::string& w) : Error("ordering mismatch: " + w) {}
};

struct TruncationMismatchError : Error {
  explicit TruncationMismatchError(const std::string& w) : Error("truncation mismatch: " + w) {}
};

/// A coefficient denominator vanished on a module weight.  Carries the
/// offending weight and linear form in the message.
struct SingularWeightError : Error {
  explicit SingularWeightError(const std::string& w) : Error("singular weight: " + w) {}
};

struct ColorMismatchError : Error {
  explicit ColorMismatchError(const std::string& w) : Error("color mismatch: " + w) {}
};

struct SpinAbsentError : Error {
  explicit SpinAbsentError(const std::string& w) : Error("spin absent from module: " + w) {}
};

struct InvalidTriangleError : Error {
  explicit InvalidTriangleError(const std::string& w) : Error("triangle rule violated: " + w) {}
};

struct UnsupportedRankError : Error {
  explicit UnsupportedRankError(const std::string& w) : Error("unsupported rank: " + w) {}
};

/// Violation of an internal invariant (a bug, not a user error).
struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error("internal error: " + w) {}
};

}  // namespace extremal
