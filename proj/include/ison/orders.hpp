#ifndef ISON_ORDERS_HPP_
#define ISON_ORDERS_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ison/isometry.hpp"

namespace ison {

// natural partial order: s <= t iff s = t*e for some idempotent e,
// which for partial shifts means s is a domain restriction of t
bool natural_leq(const Isometry& s, const Isometry& t);

// the stricter order: g << d iff g = b^k * d * a^k for some k >= 0
bool ll_leq(const Isometry& g, const Isometry& d);

// b^k * g * a^k; pushes the whole picture k steps to the right
Isometry conjugate_down(const Isometry& g, int k);

// a^k * g * b^k, but only while it stays an <<-predecessor-preimage:
// needs min(dom) > k and min(ran) > k, otherwise nullopt
std::optional<Isometry> conjugate_up(const Isometry& g, int k);

// the (A, n0) component of the canonical form; constant along <<-chains
struct Coset {
  std::vector<int> A;
  int n0 = 0;

  std::string str() const;
  friend bool operator==(const Coset&, const Coset&) = default;
  friend bool operator<(const Coset& x, const Coset& y) {
    return x.n0 != y.n0 ? x.n0 < y.n0 : x.A < y.A;
  }
};

Coset coset_of(const Isometry& g);

// Commutation of a generator power past an idempotent epsilon(A, n0, i).
// word_side says where the a^p / b^p factor stands in the input product;
// the result is the equal product with the factors swapped and the
// epsilon offset adjusted:
//
//   a^p * eps[i)  =  eps[i-p) * a^p   (p <= i, else BoundViolation)
//   b^q * eps[i)  =  eps[i+q) * b^q
//   eps[i) * a^p  =  a^p * eps[i+p)
//   eps[i) * b^q  =  b^q * eps[i-q)   (q <= i, else BoundViolation)
enum class Gen { alpha, beta };
enum class Side { left, right };

struct EpsCommutation {
  Isometry eps;   // epsilon with the adjusted offset
  Isometry word;  // the unchanged generator power
  Side eps_side;  // side eps occupies in the rewritten product
};

EpsCommutation commute_eps(Side word_side, Gen gen, int power,
                           const std::vector<int>& A, int n0, int i);

// Lazy walk down the chain g, b*g*a, b^2*g*a^2, ...; every element below
// g in << shows up exactly once.
class ChainCursor {
 public:
  explicit ChainCursor(Isometry base) : base_(std::move(base)) {}

  const Isometry& base() const { return base_; }
  int index() const { return index_; }
  Isometry current() const { return conjugate_down(base_, index_); }
  void advance() { ++index_; }

  std::vector<Isometry> take(int count);

 private:
  Isometry base_;
  int index_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Coset& c);

}  // namespace ison

#endif  // ISON_ORDERS_HPP_
