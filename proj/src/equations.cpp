#include "ison/equations.hpp"

#include <algorithm>

#include "ison/errors.hpp"

namespace ison {

std::vector<Isometry> enumerate_elements(const EnumBounds& b) {
  if (b.max_complement < 0 || b.max_offset < 0) {
    throw InvalidParameters("enumeration bounds must be >= 0");
  }
  std::vector<Isometry> out;
  for (int lo = 1; lo <= b.max_offset + 1; ++lo) {
    // all normalized domains with min = lo and tail_start - lo <= cap;
    // a gap of exactly one cannot occur
    std::vector<CofiniteSet> doms = {CofiniteSet({}, lo)};
    for (int gap = 2; gap <= b.max_complement; ++gap) {
      int t = lo + gap;
      // free positions strictly between lo and t - 1
      int free = gap - 2;
      for (int mask = 0; mask < (1 << free); ++mask) {
        std::vector<int> fp = {lo};
        for (int k = 0; k < free; ++k) {
          if (mask & (1 << k)) fp.push_back(lo + 1 + k);
        }
        doms.emplace_back(std::move(fp), t);
      }
    }
    for (const auto& d : doms) {
      for (int c = -b.max_offset; c <= b.max_offset; ++c) {
        if (lo + c >= 1) out.emplace_back(d, c);
      }
    }
  }
  return out;
}

std::vector<Isometry> solve_left(const Isometry& a, const Isometry& b) {
  if (!b.dom().subset_of(a.dom())) return {};
  int shift = b.shift() - a.shift();
  // on ran(a) the domain of x is pinned to the image of dom(b); off
  // ran(a) any members are invisible to a * x
  CofiniteSet forced = b.dom().translate(a.shift());
  std::vector<int> optional_members;
  for (int y : a.ran().complement_list()) {
    if (y + shift >= 1) optional_members.push_back(y);
  }

  std::vector<Isometry> out;
  int n = static_cast<int>(optional_members.size());
  if (n > 20) {
    throw InvalidParameters("solution family has 2^" + std::to_string(n) +
                            " members; refusing to materialize");
  }
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> fp = forced.finite_part();
    for (int k = 0; k < n; ++k) {
      if (mask & (1 << k)) fp.push_back(optional_members[k]);
    }
    Isometry x(CofiniteSet(std::move(fp), forced.tail_start()), shift);
    if (compose(a, x) == b) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](const Isometry& x, const Isometry& y) {
    return x.str() < y.str();
  });
  return out;
}

std::vector<Isometry> solve_right(const Isometry& c, const Isometry& d) {
  auto mirrored = solve_left(c.invert(), d.invert());
  for (auto& x : mirrored) x = x.invert();
  std::sort(mirrored.begin(), mirrored.end(),
            [](const Isometry& x, const Isometry& y) {
              return x.str() < y.str();
            });
  return mirrored;
}

}  // namespace ison
