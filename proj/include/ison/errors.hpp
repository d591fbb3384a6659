#ifndef ISON_ERRORS_HPP_
#define ISON_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ison {

// Root of the library's error hierarchy. Anything thrown on bad input
// derives from this; logic bugs surface as assertions instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested translation would move a member below 1.
struct UnderflowError : Error {
  using Error::Error;
};

// Structurally invalid arguments (bad A/n0 pair, negative offsets, ...).
struct InvalidParameters : Error {
  using Error::Error;
};

// A commutation rule was applied outside its stated range.
struct BoundViolation : Error {
  using Error::Error;
};

// Word parser failure; `position` is a 0-based index into the input.
struct SyntaxError : Error {
  std::size_t position;
  std::string expected;

  SyntaxError(std::size_t pos, const std::string& what_expected)
      : Error("syntax error at position " + std::to_string(pos) +
              ": expected " + what_expected),
        position(pos),
        expected(what_expected) {}
};

// The word is grammatical but names an element that cannot exist.
struct ConstraintError : Error {
  using Error::Error;
};

}  // namespace ison

#endif  // ISON_ERRORS_HPP_
