#ifndef ISON_EQUATIONS_HPP_
#define ISON_EQUATIONS_HPP_

#include <vector>

#include "ison/isometry.hpp"

namespace ison {

// Window for finite enumeration. max_complement caps noise(g), i.e. how
// ragged a domain may be above its minimum; max_offset caps min(dom) - 1
// and |shift|. Each window induces a finite, deduplicated element list.
struct EnumBounds {
  int max_complement = 3;
  int max_offset = 4;

  friend bool operator==(const EnumBounds&, const EnumBounds&) = default;
};

std::vector<Isometry> enumerate_elements(const EnumBounds& b);

// All x with a * x = b. The list is finite (the monoid has the finite
// left/right divisibility property): x's shift is forced, its domain is
// forced on ran(a), and the rest ranges over subsets of the complement
// of ran(a). Sorted by textual form.
std::vector<Isometry> solve_left(const Isometry& a, const Isometry& b);

// All x with x * c = d; mirror of solve_left through inversion.
std::vector<Isometry> solve_right(const Isometry& c, const Isometry& d);

}  // namespace ison

#endif  // ISON_EQUATIONS_HPP_
