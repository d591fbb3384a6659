#include "ison/orders.hpp"

#include <ostream>
#include <sstream>

#include "ison/errors.hpp"

namespace ison {

bool natural_leq(const Isometry& s, const Isometry& t) {
  return s.shift() == t.shift() && s.dom().subset_of(t.dom());
}

bool ll_leq(const Isometry& g, const Isometry& d) {
  auto cg = g.canonical();
  auto cd = d.canonical();
  return cg.A == cd.A && cg.n0 == cd.n0 && cg.i >= cd.i &&
         cg.i - cd.i == cg.j - cd.j;
}

Isometry conjugate_down(const Isometry& g, int k) {
  if (k < 0) throw InvalidParameters("conjugation depth must be >= 0");
  return pow(Isometry::beta(), k) * g * pow(Isometry::alpha(), k);
}

std::optional<Isometry> conjugate_up(const Isometry& g, int k) {
  if (k < 0) throw InvalidParameters("conjugation depth must be >= 0");
  auto c = g.canonical();
  if (c.i < k || c.j < k) return std::nullopt;
  return pow(Isometry::alpha(), k) * g * pow(Isometry::beta(), k);
}

Coset coset_of(const Isometry& g) {
  auto c = g.canonical();
  return Coset{std::move(c.A), c.n0};
}

EpsCommutation commute_eps(Side word_side, Gen gen, int power,
                           const std::vector<int>& A, int n0, int i) {
  if (power < 0) throw InvalidParameters("power must be >= 0");
  Isometry::epsilon(A, n0, i);  // validate the parameters up front
  bool shrinks = (word_side == Side::left) == (gen == Gen::alpha);
  if (shrinks && power > i) {
    throw BoundViolation("cannot move power " + std::to_string(power) +
                         " past epsilon offset " + std::to_string(i));
  }
  int offset = shrinks ? i - power : i + power;
  Isometry word = pow(gen == Gen::alpha ? Isometry::alpha() : Isometry::beta(),
                      power);
  return EpsCommutation{Isometry::epsilon(A, n0, offset), std::move(word),
                        word_side};
}

std::vector<Isometry> ChainCursor::take(int count) {
  std::vector<Isometry> out;
  out.reserve(count > 0 ? count : 0);
  for (int n = 0; n < count; ++n) {
    out.push_back(current());
    advance();
  }
  return out;
}

std::string Coset::str() const {
  std::ostringstream os;
  os << "(A={";
  for (std::size_t k = 0; k < A.size(); ++k) {
    if (k > 0) os << ',';
    os << A[k];
  }
  os << "}, n0=" << n0 << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Coset& c) {
  return os << c.str();
}

}  // namespace ison
