#ifndef ISON_ZEROTOP_HPP_
#define ISON_ZEROTOP_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ison/equations.hpp"
#include "ison/isometry.hpp"

namespace ison {

// An element of the monoid with zero adjoined: either the absorbing
// zero or a proper isometry.
class ZElem {
 public:
  ZElem() = default;  // zero
  explicit ZElem(Isometry g) : elem_(std::move(g)) {}

  static ZElem zero() { return ZElem(); }

  bool is_zero() const { return !elem_.has_value(); }
  const Isometry& elem() const { return *elem_; }

  std::string str() const;

  friend bool operator==(const ZElem&, const ZElem&) = default;

 private:
  std::optional<Isometry> elem_;
};

// multiplication with zero absorbing on both sides
ZElem zmul(const ZElem& x, const ZElem& y);
inline ZElem operator*(const ZElem& x, const ZElem& y) { return zmul(x, y); }

// A basic open neighborhood of zero: everything except finitely many
// nonzero elements. Zero itself is always a member.
struct CofiniteNbhd {
  std::vector<Isometry> excluded;  // sorted, duplicate-free

  CofiniteNbhd() = default;
  explicit CofiniteNbhd(std::vector<Isometry> ex);

  bool contains(const ZElem& x) const;
};

// V = U minus every y that g multiplies into U's excluded set, from
// either side. Then g * V and V * g both stay inside U.
CofiniteNbhd shrink_neighborhood(const Isometry& g, const CofiniteNbhd& u);

// true iff products of g with members of v (on both sides) avoid the
// excluded set of u, checked over the window plus zero
bool products_stay_inside(const Isometry& g, const CofiniteNbhd& v,
                          const CofiniteNbhd& u, const EnumBounds& bounds);

// shrink, then validate the shrink over the window
bool check_separate_continuity(const Isometry& g, const CofiniteNbhd& u,
                               const EnumBounds& bounds);

// (U \ V, V \ U) for neighborhoods of zero; both sides are finite
std::pair<std::vector<Isometry>, std::vector<Isometry>>
symmetric_difference_check(const CofiniteNbhd& u, const CofiniteNbhd& v);

std::ostream& operator<<(std::ostream& os, const ZElem& x);

}  // namespace ison

#endif  // ISON_ZEROTOP_HPP_
