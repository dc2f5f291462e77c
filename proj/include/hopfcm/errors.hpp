#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfcm {

/// Raised for malformed arguments: subsets outside the ground set, faces not
/// in a complex, submonoids that do not belong to a family, ...
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ValidationErrorKind {
  DuplicateElement,
  UnknownVertex,
  SelfLoop,
  DuplicateEdge,
  DirectedCycle,
  OrderCycle,
  Malformed,
};

const char* to_string(ValidationErrorKind kind);

/// A structure document that does not describe a valid structure.
class ValidationError : public InvalidInput {
 public:
  ValidationError(ValidationErrorKind kind, const std::string& what)
      : InvalidInput(what), kind_(kind) {}
  ValidationErrorKind kind() const { return kind_; }

 private:
  ValidationErrorKind kind_;
};

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Limits {
  int max_vertices = 8;                         // ground set size
  std::size_t max_faces = 2'000'000;            // faces of a single complex
  std::uint64_t max_enumeration = 50'000'000;   // k^|N| maps in brute-force counts
};

/// Defaults, overridden by HOPFCM_MAX_VERTICES, HOPFCM_MAX_FACES and
/// HOPFCM_MAX_ENUMERATION when set.
Limits limits_from_environment();

}  // namespace hopfcm
