#ifndef ISON_ISOMETRY_HPP_
#define ISON_ISOMETRY_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ison/cofinite.hpp"

namespace ison {

struct CanonicalForm;

// A cofinite partial isometry of N. Every such map is a shift
// x -> x + shift restricted to a cofinite domain, so a (domain, shift)
// pair with min(dom) + shift >= 1 is a complete and unique description.
//
// Products act on the right: (x)(g*d) = ((x)g)d, i.e. g*d applies g
// first. Normalized domains make operator== literal set equality.
class Isometry {
 public:
  // identity map of N
  Isometry() : shift_(0) {}

  // the shift x -> x + shift defined exactly on dom;
  // throws InvalidParameters unless min(dom) + shift >= 1
  Isometry(CofiniteSet dom, int shift);

  static Isometry identity() { return Isometry(); }
  // a: defined on all of N, x -> x + 1
  static Isometry alpha();
  // b: defined on [2), x -> x - 1
  static Isometry beta();

  // identity map of the set i + (A ∪ [n0)). Requires either A empty and
  // n0 = 0, or min(A) = 1 and n0 >= max(A) + 2; throws InvalidParameters
  // otherwise. These are exactly the idempotents in canonical position.
  static Isometry epsilon(const std::vector<int>& A, int n0, int i);

  const CofiniteSet& dom() const { return dom_; }
  CofiniteSet ran() const { return dom_.translate(shift_); }
  int shift() const { return shift_; }

  std::optional<int> eval(int n) const {
    if (n < 1 || !dom_.member(n)) return std::nullopt;
    return n + shift_;
  }

  bool idempotent() const { return shift_ == 0; }

  // tail_start(dom) - min(dom): how far the domain is from being a full
  // tail. 0 exactly for the bicyclic elements b^i a^j.
  int noise() const { return dom_.tail_start() - dom_.min_member(); }

  CanonicalForm canonical() const;

  Isometry invert() const { return Isometry(ran(), -shift_); }

  std::string str() const;  // iso(dom=...; shift=c)

  friend bool operator==(const Isometry&, const Isometry&) = default;
  friend bool operator<(const Isometry& a, const Isometry& b) {
    return a.shift_ != b.shift_ ? a.shift_ < b.shift_ : a.dom_ < b.dom_;
  }

 private:
  CofiniteSet dom_;
  int shift_;
};

// apply g, then d
Isometry compose(const Isometry& g, const Isometry& d);
inline Isometry operator*(const Isometry& g, const Isometry& d) {
  return compose(g, d);
}

// g composed with itself k >= 0 times (k = 0 gives the identity)
Isometry pow(const Isometry& g, int k);

// b^i a^j: the pure shift by j - i defined on [i+1)
Isometry bicyclic(int i, int j);

// The unique expression g = epsilon(A, n0, i) * b^i a^j with
// i = min(dom) - 1 and j = min(ran) - 1. A empty (with n0 = 0) exactly
// when dom is a full tail.
struct CanonicalForm {
  std::vector<int> A;
  int n0 = 0;
  int i = 0;
  int j = 0;

  std::string str() const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// inverse of Isometry::canonical(); accepts any valid (A, n0) with
// i, j >= 0 and throws InvalidParameters otherwise
Isometry rebuild(const CanonicalForm& cf);

std::ostream& operator<<(std::ostream& os, const Isometry& g);
std::ostream& operator<<(std::ostream& os, const CanonicalForm& cf);

}  // namespace ison

#endif  // ISON_ISOMETRY_HPP_
