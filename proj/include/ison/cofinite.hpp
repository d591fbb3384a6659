#ifndef ISON_COFINITE_HPP_
#define ISON_COFINITE_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ison {

// A cofinite subset of N = {1, 2, 3, ...}, stored as a sorted finite part
// plus the start of an infinite tail:
//
//   set = finite_part ∪ [tail_start, ∞)
//
// The representation is kept normalized: tail_start is minimal, i.e.
// tail_start - 1 is never a member, and every finite-part member is
// strictly below tail_start - 1. Equality of normalized values is
// therefore equality of sets.
class CofiniteSet {
 public:
  // The full set N.
  CofiniteSet() : tail_start_(1) {}

  // finite_part ∪ [tail_start, ∞), normalized on entry. Members and
  // tail_start must be >= 1; duplicates are tolerated, members already
  // covered by the tail are absorbed.
  CofiniteSet(std::vector<int> finite_part, int tail_start);

  static CofiniteSet nat() { return CofiniteSet(); }

  bool member(int n) const;
  int min_member() const;
  bool subset_of(const CofiniteSet& other) const;

  CofiniteSet intersect(const CofiniteSet& other) const;

  // {x + c : x in this}; throws UnderflowError if min_member() + c < 1.
  CofiniteSet translate(int c) const;

  // N \ set, ascending. Always has tail_start - 1 - |finite_part| elements.
  std::vector<int> complement_list() const;

  const std::vector<int>& finite_part() const { return finite_part_; }
  int tail_start() const { return tail_start_; }

  // "{m1,m2,...}+[t)"; plain "[t)" when the finite part is empty.
  std::string str() const;

  friend bool operator==(const CofiniteSet&, const CofiniteSet&) = default;
  friend bool operator<(const CofiniteSet& a, const CofiniteSet& b) {
    return a.tail_start_ != b.tail_start_ ? a.tail_start_ < b.tail_start_
                                          : a.finite_part_ < b.finite_part_;
  }

 private:
  std::vector<int> finite_part_;
  int tail_start_;
};

std::ostream& operator<<(std::ostream& os, const CofiniteSet& s);

}  // namespace ison

#endif  // ISON_COFINITE_HPP_
