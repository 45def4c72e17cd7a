#pragma once

#include <stdexcept>
#include <string>

namespace pya {

/// Malformed input text: bad half-integer literal, bad JSON shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates an operation's precondition
/// (mixed lines, mismatched anchors, invalid bad-parity multiset, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pya
