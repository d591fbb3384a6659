#ifndef ISON_WORDLANG_HPP_
#define ISON_WORDLANG_HPP_

#include <string>
#include <vector>

#include "ison/zerotop.hpp"

namespace ison {

// Abstract syntax for generator words:
//
//   word := term { term }
//   term := atom [ '^' nat ]
//   atom := 'a' | 'b' | 'I' | 'Z' | eps | '(' word ')'
//   eps  := 'eps' '(' 'A' '=' set ';' 'n0' '=' nat ')' '[' nat ')'
//   set  := '{' [ nat { ',' nat } ] '}'
//
// Whitespace is insignificant except inside numbers. Products associate
// to the left; x^0 is the empty product I for every atom.
struct GenWord {
  enum class Kind { a, b, id, zero, eps, product, power };

  Kind kind = Kind::id;
  std::vector<int> A;  // eps payload
  int n0 = 0;
  int offset = 0;
  int exponent = 0;                // power payload
  std::vector<GenWord> children;   // product: two; power: one

  static GenWord atom(Kind k) { return GenWord{k, {}, 0, 0, 0, {}}; }
};

// throws SyntaxError (with 0-based position) on malformed input and
// ConstraintError when an eps names parameters no idempotent has
GenWord parse_word(const std::string& text);

ZElem eval_word(const GenWord& w);

// parse + eval in one step
ZElem eval_text(const std::string& text);

// The canonical word for x: "Z", "I", or
// "eps(A={...};n0=N)[i) b^i a^j" with empty eps and zero powers omitted.
// Always reparses to x.
std::string format(const ZElem& x);
std::string format(const Isometry& g);

}  // namespace ison

#endif  // ISON_WORDLANG_HPP_
