#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace betti {

/// Operands carry mismatched ambient variable counts.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A precondition on otherwise well-formed input failed (zero/unit ideal
/// where a proper one is required, witness outside the dominant class, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds the configured subset-enumeration cap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A structural invariant of a chain complex failed (d∘d != 0, an
/// inhomogeneous entry, a zero-coefficient stored entry).
struct IntegrityError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Text input rejected; position is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace betti
