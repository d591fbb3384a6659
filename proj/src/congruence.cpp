#include "ison/congruence.hpp"

#include <algorithm>

namespace ison {

int mg_image(const Isometry& g) { return g.shift(); }

MgWitness mg_related(const Isometry& g, const Isometry& d) {
  if (g.shift() != d.shift()) return MgWitness{};
  // e * g = e * d needs the domains to agree from e's tail on, so the
  // minimal tail sits just past the last point where they disagree
  int m = 1;
  int upto = std::max(g.dom().tail_start(), d.dom().tail_start());
  for (int x = 1; x < upto; ++x) {
    if (g.dom().member(x) != d.dom().member(x)) m = x + 1;
  }
  return MgWitness{true, Isometry(CofiniteSet({}, m), 0)};
}

std::pair<Isometry, Isometry> simple_witness(const Isometry& g,
                                             const Isometry& d) {
  // a^p * g * b^q with p, q the tail offsets flattens g to the identity;
  // the canonical expression of d then steers the identity onto d
  int p = g.dom().tail_start() - 1;
  int q = g.ran().tail_start() - 1;
  auto c = d.canonical();
  Isometry u = Isometry::epsilon(c.A, c.n0, c.i) *
               pow(Isometry::beta(), c.i) * pow(Isometry::alpha(), p);
  Isometry v = pow(Isometry::beta(), q) * pow(Isometry::alpha(), c.j);
  return {u, v};
}

bool green_R(const Isometry& g, const Isometry& d) {
  return g.dom() == d.dom();
}

bool green_L(const Isometry& g, const Isometry& d) {
  return g.ran() == d.ran();
}

bool green_H(const Isometry& g, const Isometry& d) {
  return green_R(g, d) && green_L(g, d);
}

bool green_D(const Isometry& g, const Isometry& d) {
  int c = d.dom().min_member() - g.dom().min_member();
  return g.dom().translate(c) == d.dom();
}

}  // namespace ison
