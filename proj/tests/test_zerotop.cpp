#include "ison/zerotop.hpp"

#include <vector>

#include "doctest.h"

using namespace ison;

namespace {

const Isometry kId = Isometry::identity();
const Isometry kA = Isometry::alpha();
const Isometry kB = Isometry::beta();
const ZElem kZero = ZElem::zero();

}  // namespace

TEST_CASE("zerotop: zero absorbs") {
  CHECK(zmul(kZero, ZElem(kA)) == kZero);
  CHECK(zmul(ZElem(kA), kZero) == kZero);
  CHECK(zmul(kZero, kZero) == kZero);
  CHECK(kZero.is_zero());
  CHECK_FALSE(ZElem(kId).is_zero());
  CHECK(kZero.str() == "Z");
}

TEST_CASE("zerotop: nonzero products match plain composition") {
  auto elems = enumerate_elements({2, 2});
  for (const auto& g : elems) {
    for (const auto& d : elems) {
      // the discrete model multiplies exactly like the raw monoid
      CHECK(zmul(ZElem(g), ZElem(d)) == ZElem(g * d));
    }
  }
}

TEST_CASE("zerotop: associativity with zero mixed in") {
  std::vector<ZElem> elems = {kZero};
  for (const auto& g : enumerate_elements({2, 1})) elems.emplace_back(g);
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      for (const auto& z : elems) {
        CHECK(zmul(zmul(x, y), z) == zmul(x, zmul(y, z)));
      }
    }
  }
}

TEST_CASE("zerotop: neighborhoods") {
  CofiniteNbhd full;
  CHECK(full.contains(kZero));
  CHECK(full.contains(ZElem(kA)));

  CofiniteNbhd u({kId, kId, kA});
  CHECK(u.excluded.size() == 2);
  CHECK(u.contains(kZero));
  CHECK_FALSE(u.contains(ZElem(kId)));
  CHECK(u.contains(ZElem(kB)));
}

TEST_CASE("zerotop: shrink_neighborhood") {
  CofiniteNbhd full;
  CHECK(shrink_neighborhood(kA, full).excluded.empty());

  auto v = shrink_neighborhood(kA, CofiniteNbhd({kId}));
  CHECK(v.excluded == std::vector<Isometry>{kB, kId});

  Isometry e2(CofiniteSet({}, 2), 0);
  auto w = shrink_neighborhood(e2, CofiniteNbhd({e2}));
  CHECK(w.excluded == std::vector<Isometry>{kId, e2});
}

TEST_CASE("zerotop: shrink makes products stay inside") {
  EnumBounds window{3, 4};
  auto probes = enumerate_elements({1, 2});
  for (const auto& g : probes) {
    for (const auto& k1 : probes) {
      for (const auto& k2 : probes) {
        CofiniteNbhd u({k1, k2});
        CHECK(check_separate_continuity(g, u, window));
        auto v = shrink_neighborhood(g, u);
        // V really is a sub-neighborhood of U
        for (const auto& x : u.excluded) {
          CHECK_FALSE(v.contains(ZElem(x)));
        }
      }
    }
  }
}

TEST_CASE("zerotop: dropping a required exclusion is caught") {
  CofiniteNbhd u({kId});
  auto v = shrink_neighborhood(kA, u);
  // forget that a * b = I: the mutilated V leaks through multiplication
  CofiniteNbhd broken({kId});
  CHECK_FALSE(products_stay_inside(kA, broken, u, {2, 2}));
  CHECK(products_stay_inside(kA, v, u, {2, 2}));
}

TEST_CASE("zerotop: symmetric difference of neighborhoods") {
  CofiniteNbhd u({kA});
  CofiniteNbhd v({kB});
  auto [u_minus_v, v_minus_u] = symmetric_difference_check(u, v);
  CHECK(u_minus_v == std::vector<Isometry>{kB});
  CHECK(v_minus_u == std::vector<Isometry>{kA});

  auto [same1, same2] = symmetric_difference_check(u, u);
  CHECK(same1.empty());
  CHECK(same2.empty());

  CofiniteNbhd full;
  auto [f1, f2] = symmetric_difference_check(full, v);
  CHECK(f1 == std::vector<Isometry>{kB});
  CHECK(f2.empty());
}
