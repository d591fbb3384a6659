#include "ison/isometry.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ison/errors.hpp"

namespace ison {

Isometry::Isometry(CofiniteSet dom, int shift)
    : dom_(std::move(dom)), shift_(shift) {
  if (dom_.min_member() + shift_ < 1) {
    throw InvalidParameters("shift " + std::to_string(shift_) +
                            " maps " + std::to_string(dom_.min_member()) +
                            " below 1");
  }
}

Isometry Isometry::alpha() { return Isometry(CofiniteSet::nat(), 1); }

Isometry Isometry::beta() { return Isometry(CofiniteSet({}, 2), -1); }

Isometry Isometry::epsilon(const std::vector<int>& A, int n0, int i) {
  if (i < 0) throw InvalidParameters("epsilon offset must be >= 0");
  if (A.empty()) {
    if (n0 != 0) {
      throw InvalidParameters("empty A requires n0 = 0, got " +
                              std::to_string(n0));
    }
    return Isometry(CofiniteSet({}, i + 1), 0);
  }
  auto sorted = A;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() != 1) {
    throw InvalidParameters("nonempty A must contain 1");
  }
  if (n0 < sorted.back() + 2) {
    throw InvalidParameters("n0 must be >= max(A) + 2, got n0 = " +
                            std::to_string(n0) + " with max(A) = " +
                            std::to_string(sorted.back()));
  }
  for (int& m : sorted) m += i;
  return Isometry(CofiniteSet(std::move(sorted), i + n0), 0);
}

CanonicalForm Isometry::canonical() const {
  CanonicalForm cf;
  cf.i = dom_.min_member() - 1;
  cf.j = cf.i + shift_;
  if (!dom_.finite_part().empty()) {
    for (int m : dom_.finite_part()) cf.A.push_back(m - cf.i);
    cf.n0 = dom_.tail_start() - cf.i;
  }
  return cf;
}

std::string Isometry::str() const {
  std::ostringstream os;
  os << "iso(dom=" << dom_.str() << "; shift=" << shift_ << ')';
  return os.str();
}

Isometry compose(const Isometry& g, const Isometry& d) {
  // x is mapped iff x in dom(g) and (x)g in dom(d); from
  // max(tail(dom g), tail(dom d) - shift(g)) on this always holds
  int t = std::max({1, g.dom().tail_start(),
                    d.dom().tail_start() - g.shift()});
  std::vector<int> fp;
  for (int x = 1; x < t; ++x) {
    if (g.dom().member(x) && d.dom().member(x + g.shift())) fp.push_back(x);
  }
  return Isometry(CofiniteSet(std::move(fp), t), g.shift() + d.shift());
}

Isometry pow(const Isometry& g, int k) {
  if (k < 0) throw InvalidParameters("power must be >= 0");
  Isometry acc;
  for (int n = 0; n < k; ++n) acc = compose(acc, g);
  return acc;
}

Isometry bicyclic(int i, int j) {
  if (i < 0 || j < 0) throw InvalidParameters("exponents must be >= 0");
  return Isometry(CofiniteSet({}, i + 1), j - i);
}

Isometry rebuild(const CanonicalForm& cf) {
  if (cf.j < 0) throw InvalidParameters("canonical j must be >= 0");
  return compose(Isometry::epsilon(cf.A, cf.n0, cf.i), bicyclic(cf.i, cf.j));
}

std::string CanonicalForm::str() const {
  std::ostringstream os;
  os << "eps(A={";
  for (std::size_t k = 0; k < A.size(); ++k) {
    if (k > 0) os << ',';
    os << A[k];
  }
  os << "};n0=" << n0 << ")[" << i << ") b^" << i << " a^" << j;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Isometry& g) {
  return os << g.str();
}

std::ostream& operator<<(std::ostream& os, const CanonicalForm& cf) {
  return os << cf.str();
}

}  // namespace ison
