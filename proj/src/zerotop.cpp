#include "ison/zerotop.hpp"

#include <algorithm>
#include <ostream>

#include "ison/equations.hpp"

namespace ison {

std::string ZElem::str() const { return is_zero() ? "Z" : elem_->str(); }

ZElem zmul(const ZElem& x, const ZElem& y) {
  if (x.is_zero() || y.is_zero()) return ZElem::zero();
  return ZElem(compose(x.elem(), y.elem()));
}

CofiniteNbhd::CofiniteNbhd(std::vector<Isometry> ex) : excluded(std::move(ex)) {
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()),
                 excluded.end());
}

bool CofiniteNbhd::contains(const ZElem& x) const {
  if (x.is_zero()) return true;
  return !std::binary_search(excluded.begin(), excluded.end(), x.elem());
}

CofiniteNbhd shrink_neighborhood(const Isometry& g, const CofiniteNbhd& u) {
  std::vector<Isometry> ex = u.excluded;
  for (const Isometry& k : u.excluded) {
    for (const Isometry& x : solve_left(g, k)) ex.push_back(x);
    for (const Isometry& x : solve_right(g, k)) ex.push_back(x);
  }
  return CofiniteNbhd(std::move(ex));
}

bool products_stay_inside(const Isometry& g, const CofiniteNbhd& v,
                          const CofiniteNbhd& u, const EnumBounds& bounds) {
  ZElem zg(g);
  if (!u.contains(zmul(zg, ZElem::zero()))) return false;
  for (const Isometry& x : enumerate_elements(bounds)) {
    ZElem zx(x);
    if (!v.contains(zx)) continue;
    if (!u.contains(zmul(zg, zx))) return false;
    if (!u.contains(zmul(zx, zg))) return false;
  }
  return true;
}

bool check_separate_continuity(const Isometry& g, const CofiniteNbhd& u,
                               const EnumBounds& bounds) {
  return products_stay_inside(g, shrink_neighborhood(g, u), u, bounds);
}

std::pair<std::vector<Isometry>, std::vector<Isometry>>
symmetric_difference_check(const CofiniteNbhd& u, const CofiniteNbhd& v) {
  // U \ V collects exactly the points V excludes and U does not
  std::vector<Isometry> u_minus_v;
  std::vector<Isometry> v_minus_u;
  for (const Isometry& x : v.excluded) {
    if (u.contains(ZElem(x))) u_minus_v.push_back(x);
  }
  for (const Isometry& x : u.excluded) {
    if (v.contains(ZElem(x))) v_minus_u.push_back(x);
  }
  return {u_minus_v, v_minus_u};
}

std::ostream& operator<<(std::ostream& os, const ZElem& x) {
  return os << x.str();
}

}  // namespace ison
