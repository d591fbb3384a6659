#ifndef ISON_CONGRUENCE_HPP_
#define ISON_CONGRUENCE_HPP_

#include <optional>
#include <utility>

#include "ison/isometry.hpp"

namespace ison {

// Image of g in the group quotient by the least group congruence. Two
// elements are identified iff some idempotent equalizes them, which
// happens exactly when their shifts agree, so the quotient is (Z, +).
int mg_image(const Isometry& g);

struct MgWitness {
  bool related = false;
  // identity map of [m) with m minimal such that witness * g = witness * d;
  // empty unless related
  std::optional<Isometry> witness;
};

MgWitness mg_related(const Isometry& g, const Isometry& d);

// A pair (u, v) with u * g * v = d; always exists since the monoid is
// simple. u and v are products of generator powers and the domain
// idempotent of d.
std::pair<Isometry, Isometry> simple_witness(const Isometry& g,
                                             const Isometry& d);

// Green's relations: R/L compare domains/ranges, H is their meet, D
// holds when the domains differ by a translation.
bool green_R(const Isometry& g, const Isometry& d);
bool green_L(const Isometry& g, const Isometry& d);
bool green_H(const Isometry& g, const Isometry& d);
bool green_D(const Isometry& g, const Isometry& d);

}  // namespace ison

#endif  // ISON_CONGRUENCE_HPP_
