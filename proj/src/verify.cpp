#include "ison/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ison/congruence.hpp"
#include "ison/errors.hpp"
#include "ison/orders.hpp"
#include "ison/wordlang.hpp"
#include "ison/zerotop.hpp"

namespace ison::verify {
namespace {

struct Checker {
  long long count = 0;
  bool ok = true;
  std::string detail;

  template <class F>
  void require(bool cond, F&& describe) {
    ++count;
    if (!cond && ok) {
      ok = false;
      detail = describe();
    }
  }

  CheckResult result(const std::string& id, const std::string& title) const {
    return CheckResult{id, title, ok, count, detail};
  }
};

CheckResult merge(const std::string& id, const std::string& title,
                  const std::vector<CheckResult>& parts) {
  CheckResult out{id, title, true, 0, ""};
  for (const auto& part : parts) {
    out.checks += part.checks;
    if (!part.passed && out.passed) {
      out.passed = false;
      out.detail = part.id + ": " + part.detail;
    }
  }
  return out;
}

std::string pair_str(const Isometry& g, const Isometry& d) {
  return g.str() + " , " + d.str();
}

// valid (A, n0) payloads with |A| <= max_size and n0 <= max_n0
std::vector<std::pair<std::vector<int>, int>> finite_payloads(int max_size,
                                                              int max_n0) {
  std::vector<std::pair<std::vector<int>, int>> out;
  out.push_back({{}, 0});
  std::vector<std::vector<int>> sets;
  for (int top = 1; top + 2 <= max_n0; ++top) {
    if (top == 1) {
      sets.push_back({1});
      continue;
    }
    int mid = top - 2;  // free choice over {2, .., top-1}
    for (int mask = 0; mask < (1 << mid); ++mask) {
      std::vector<int> a{1};
      for (int b = 0; b < mid; ++b) {
        if (mask & (1 << b)) a.push_back(2 + b);
      }
      a.push_back(top);
      sets.push_back(a);
    }
  }
  for (const auto& a : sets) {
    if (static_cast<int>(a.size()) > max_size) continue;
    for (int n0 = a.back() + 2; n0 <= max_n0; ++n0) out.push_back({a, n0});
  }
  return out;
}

CheckResult check_axioms(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  auto small = enumerate_elements({2, 3});
  const Isometry id = Isometry::identity();

  for (const auto& g : elems) {
    c.require(compose(g, id) == g && compose(id, g) == g,
              [&] { return "identity law fails for " + g.str(); });
    auto gi = g.invert();
    c.require(compose(compose(g, gi), g) == g,
              [&] { return "g g' g != g for " + g.str(); });
    c.require(compose(compose(gi, g), gi) == gi,
              [&] { return "g' g g' != g' for " + g.str(); });
    c.require(gi.invert() == g,
              [&] { return "double inverse fails for " + g.str(); });
  }

  for (const auto& g : elems) {
    for (const auto& d : elems) {
      c.require(compose(g, d).invert() == compose(d.invert(), g.invert()),
                [&] { return "(gd)' != d'g' for " + pair_str(g, d); });
      if (g.idempotent() && d.idempotent()) {
        c.require(compose(g, d) == compose(d, g), [&] {
          return "idempotents do not commute: " + pair_str(g, d);
        });
      }
    }
  }

  for (const auto& g : small) {
    for (const auto& d : small) {
      for (const auto& h : small) {
        c.require(compose(compose(g, d), h) == compose(g, compose(d, h)),
                  [&] {
                    return "associativity fails at " + pair_str(g, d) + " , " +
                           h.str();
                  });
      }
    }
  }

  std::mt19937 rng(opt.seed);
  const std::size_t n = elems.size();
  for (int s = 0; s < opt.samples; ++s) {
    const Isometry& g = elems[rng() % n];
    const Isometry& d = elems[rng() % n];
    const Isometry& h = elems[rng() % n];
    c.require(compose(compose(g, d), h) == compose(g, compose(d, h)), [&] {
      return "sampled associativity fails at " + pair_str(g, d) + " , " +
             h.str();
    });
  }
  return c.result("axioms", "inverse monoid axioms");
}

CheckResult check_canonical(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  for (const auto& g : elems) {
    auto cf = g.canonical();
    c.require(rebuild(cf) == g,
              [&] { return "rebuild(canonical) != g for " + g.str(); });
    c.require(cf.i == g.dom().min_member() - 1 &&
                  cf.j == g.ran().min_member() - 1,
              [&] { return "canonical offsets wrong for " + g.str(); });
    c.require(cf.j - cf.i == g.shift(),
              [&] { return "canonical shift wrong for " + g.str(); });

    // both product orders named by the canonical word agree
    auto eps_left = Isometry::epsilon(cf.A, cf.n0, cf.i);
    auto eps_right = Isometry::epsilon(cf.A, cf.n0, cf.j);
    auto word = bicyclic(cf.i, cf.j);
    c.require(compose(eps_left, word) == g && compose(word, eps_right) == g,
              [&] { return "canonical word does not evaluate to " + g.str(); });

    // shallower conjugate words name the same element
    for (int k = 1; k <= std::min(cf.i, cf.j); ++k) {
      auto shallow = bicyclic(cf.i - k, cf.j - k);
      c.require(compose(eps_left, shallow) == g, [&] {
        std::ostringstream os;
        os << "shallow word at k=" << k << " misses " << g.str();
        return os.str();
      });
    }
  }

  // canonical(rebuild) is the identity on well-formed tuples
  for (const auto& [a, n0] : finite_payloads(3, opt.bounds.max_offset + 2)) {
    for (int i = 0; i <= opt.bounds.max_offset; ++i) {
      for (int j = 0; j <= opt.bounds.max_offset + i; ++j) {
        CanonicalForm cf;
        cf.A = a;
        cf.n0 = n0;
        cf.i = i;
        cf.j = j;
        auto got = rebuild(cf).canonical();
        c.require(got == cf,
                  [&] { return "canonical(rebuild) != id at " + cf.str(); });
      }
    }
  }
  return c.result("prop-2.4", "canonical form round-trip");
}

CheckResult check_bicyclic(const Options&) {
  Checker c;
  const int top = 8;
  for (int k = 0; k <= top; ++k) {
    for (int l = 0; l <= top; ++l) {
      auto left = bicyclic(k, l);
      c.require(left == compose(pow(Isometry::beta(), k),
                                pow(Isometry::alpha(), l)),
                [&] {
                  std::ostringstream os;
                  os << "generator word mismatch at (" << k << "," << l << ")";
                  return os.str();
                });
      for (int m = 0; m <= top; ++m) {
        for (int n = 0; n <= top; ++n) {
          int r = std::min(l, m);
          auto want = bicyclic(k + m - r, l + n - r);
          c.require(compose(left, bicyclic(m, n)) == want, [&] {
            std::ostringstream os;
            os << "product formula fails at (" << k << "," << l << ")x(" << m
               << "," << n << ")";
            return os.str();
          });
        }
      }
    }
  }
  return c.result("bicyclic", "bicyclic product formula");
}

CheckResult check_commutation(const Options& opt) {
  Checker c;
  const int top = opt.max_i;
  for (const auto& [a, n0] : finite_payloads(2, top)) {
    for (int i = 0; i <= top; ++i) {
      auto eps = Isometry::epsilon(a, n0, i);
      for (int p = 1; p <= top; ++p) {
        for (Side word_side : {Side::left, Side::right}) {
          for (Gen gen : {Gen::alpha, Gen::beta}) {
            bool shrinks = (word_side == Side::left) == (gen == Gen::alpha);
            bool threw = false;
            std::optional<EpsCommutation> moved;
            try {
              moved = commute_eps(word_side, gen, p, a, n0, i);
            } catch (const BoundViolation&) {
              threw = true;
            }
            c.require(threw == (shrinks && p > i), [&] {
              std::ostringstream os;
              os << "bound violation mismatch at i=" << i << " p=" << p;
              return os.str();
            });
            if (threw) continue;

            auto gen_word = pow(
                gen == Gen::alpha ? Isometry::alpha() : Isometry::beta(), p);
            Isometry before = word_side == Side::left
                                  ? compose(gen_word, eps)
                                  : compose(eps, gen_word);
            Isometry after = moved->eps_side == Side::left
                                 ? compose(moved->eps, moved->word)
                                 : compose(moved->word, moved->eps);
            c.require(before == after, [&] {
              std::ostringstream os;
              os << "commutation identity fails at i=" << i << " p=" << p;
              return os.str();
            });
            c.require(moved->word == gen_word && moved->eps_side == word_side,
                      [&] { return std::string("moved word altered"); });
          }
        }
      }
    }
  }
  return c.result("lemma-2.12", "idempotent commutation rules");
}

CheckResult check_natural_order(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  const std::size_t n = elems.size();

  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    const Isometry& s = elems[x];
    auto e = compose(s, s.invert());  // identity on dom s
    auto f = compose(s.invert(), s);  // identity on ran s
    for (std::size_t y = 0; y < n; ++y) {
      const Isometry& t = elems[y];
      leq[x][y] = natural_leq(s, t) ? 1 : 0;
      c.require(leq[x][y] == (compose(e, t) == s ? 1 : 0), [&] {
        return "left idempotent witness disagrees for " + pair_str(s, t);
      });
      c.require(leq[x][y] == (compose(t, f) == s ? 1 : 0), [&] {
        return "right idempotent witness disagrees for " + pair_str(s, t);
      });
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    c.require(leq[x][x] == 1, [&] { return std::string("not reflexive"); });
    for (std::size_t y = 0; y < n; ++y) {
      if (leq[x][y] && leq[y][x]) {
        c.require(x == y, [&] { return std::string("not antisymmetric"); });
      }
      if (!leq[x][y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (leq[y][z]) {
          c.require(leq[x][z] == 1,
                    [&] { return std::string("not transitive"); });
        }
      }
    }
  }
  return c.result("prop-2.6", "natural order as restriction");
}

CheckResult check_order_coincidence(const Options&) {
  Checker c;
  const int top = 8;
  for (int i1 = 0; i1 <= top; ++i1) {
    for (int j1 = 0; j1 <= top; ++j1) {
      auto g = bicyclic(i1, j1);
      for (int i2 = 0; i2 <= top; ++i2) {
        for (int j2 = 0; j2 <= top; ++j2) {
          auto d = bicyclic(i2, j2);
          bool nat = natural_leq(g, d);
          bool ll = ll_leq(g, d);
          bool closed = j2 <= j1 && i1 - i2 == j1 - j2 && i1 >= i2;
          c.require(nat == ll && ll == closed, [&] {
            std::ostringstream os;
            os << "order mismatch at (" << i1 << "," << j1 << ") vs (" << i2
               << "," << j2 << ")";
            return os.str();
          });
        }
      }
    }
  }
  return c.result("prop-2.7", "orders coincide on shift words");
}

CheckResult check_ll_decision(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  const std::size_t n = elems.size();
  std::vector<std::vector<Isometry>> chains;
  chains.reserve(n);
  for (const auto& d : elems) chains.push_back(ChainCursor(d).take(11));

  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    const Isometry& g = elems[x];
    for (std::size_t y = 0; y < n; ++y) {
      const Isometry& d = elems[y];
      leq[x][y] = ll_leq(g, d) ? 1 : 0;
      bool found = false;
      for (const auto& down : chains[y]) {
        if (down == g) {
          found = true;
          break;
        }
      }
      c.require(leq[x][y] == (found ? 1 : 0), [&] {
        return "conjugation search disagrees for " + pair_str(g, d);
      });
      if (g.idempotent() && d.idempotent()) {
        auto cg = g.canonical();
        auto cd = d.canonical();
        bool idem_rule = cg.A == cd.A && cg.n0 == cd.n0 && cg.i >= cd.i;
        c.require(leq[x][y] == (idem_rule ? 1 : 0), [&] {
          return "idempotent rule disagrees for " + pair_str(g, d);
        });
      }
    }
  }

  // the shifted relation is itself a partial order
  for (std::size_t x = 0; x < n; ++x) {
    c.require(leq[x][x] == 1,
              [&] { return std::string("shifted order not reflexive"); });
    for (std::size_t y = 0; y < n; ++y) {
      if (leq[x][y] && leq[y][x]) {
        c.require(x == y,
                  [&] { return std::string("shifted order not antisymmetric"); });
      }
      if (!leq[x][y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (leq[y][z]) {
          c.require(leq[x][z] == 1,
                    [&] { return std::string("shifted order not transitive"); });
        }
      }
    }
  }
  return c.result("lemma-2.14", "shifted order decision procedure");
}

CheckResult check_chains(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  for (const auto& g : elems) {
    auto chain = ChainCursor(g).take(20);
    c.require(chain.size() == 20 && chain[0] == g,
              [&] { return "chain head wrong for " + g.str(); });
    std::set<Isometry> distinct(chain.begin(), chain.end());
    c.require(distinct.size() == chain.size(),
              [&] { return "chain repeats for " + g.str(); });
    auto cg = g.canonical();
    for (std::size_t m = 0; m < chain.size(); ++m) {
      auto cm = chain[m].canonical();
      c.require(cm.A == cg.A && cm.n0 == cg.n0 &&
                    cm.i == cg.i + static_cast<int>(m) &&
                    cm.j == cg.j + static_cast<int>(m),
                [&] { return "chain member malformed for " + g.str(); });
      for (std::size_t k = 0; k < chain.size(); ++k) {
        c.require(ll_leq(chain[m], chain[k]) == (m >= k), [&] {
          std::ostringstream os;
          os << "chain not linearly ordered at " << m << "," << k;
          return os.str();
        });
      }
    }
  }
  return c.result("lemma-2.8", "descending chains");
}

CheckResult check_coset_stability(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  for (const auto& g : elems) {
    auto base = coset_of(g);
    auto cf = g.canonical();
    for (int k = 0; k <= 20; ++k) {
      c.require(coset_of(conjugate_down(g, k)) == base,
                [&] { return "coset drifts under conjugation: " + g.str(); });
    }
    for (int k = 1; k <= 5; ++k) {
      auto up = conjugate_up(g, k);
      c.require(up.has_value() == (cf.i >= k && cf.j >= k),
                [&] { return "conjugate_up defined-ness wrong: " + g.str(); });
      if (up) {
        c.require(conjugate_down(*up, k) == g && coset_of(*up) == base,
                  [&] { return "up/down round trip fails: " + g.str(); });
      }
    }
  }
  return c.result("prop-2.13", "cosets are conjugation stable");
}

CheckResult check_sandwich(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  std::vector<Isometry> words;
  for (const auto& g : elems) {
    if (g.noise() == 0) words.push_back(g);
  }
  for (const auto& gamma : elems) {
    auto base = coset_of(gamma);
    auto etas = ChainCursor(gamma).take(7);
    for (const auto& w1 : words) {
      auto left = compose(w1, gamma);
      for (const auto& w2 : words) {
        auto framed = compose(left, w2);
        if (coset_of(framed) != base) continue;
        for (int k = 1; k <= 6; ++k) {
          auto moved = compose(compose(w1, etas[k]), w2);
          c.require(ll_leq(moved, framed) && coset_of(moved) == base, [&] {
            return "sandwich fails below " + gamma.str() + " between " +
                   pair_str(w1, w2);
          });
        }
      }
    }
  }
  return c.result("lemma-2.16", "sandwiched conjugates stay below");
}

CheckResult check_solvers(const Options&) {
  Checker c;
  auto probes = enumerate_elements({2, 3});
  auto universe = enumerate_elements({4, 6});

  for (const auto& a : probes) {
    for (const auto& b : probes) {
      auto sols = solve_left(a, b);
      std::set<Isometry> seen(sols.begin(), sols.end());
      c.require(seen.size() == sols.size(),
                [&] { return "left solutions repeat for " + pair_str(a, b); });
      for (const auto& x : sols) {
        c.require(compose(a, x) == b, [&] {
          return "left solution does not recompose for " + pair_str(a, b);
        });
      }
      c.require(sols.empty() == !b.dom().subset_of(a.dom()), [&] {
        return "left solvability criterion fails for " + pair_str(a, b);
      });
      if (!sols.empty()) {
        long long free_slots = 0;
        for (int y : a.ran().complement_list()) {
          if (y + b.shift() - a.shift() >= 1) ++free_slots;
        }
        c.require(static_cast<long long>(sols.size()) == (1LL << free_slots),
                  [&] { return "left count formula fails for " +
                               pair_str(a, b); });
      }
      for (const auto& x : universe) {
        if (compose(a, x) == b) {
          c.require(seen.count(x) == 1, [&] {
            return "left solver misses " + x.str() + " for " + pair_str(a, b);
          });
        }
      }

      auto rsols = solve_right(a, b);
      std::set<Isometry> rseen(rsols.begin(), rsols.end());
      c.require(rseen.size() == rsols.size(), [&] {
        return "right solutions repeat for " + pair_str(a, b);
      });
      for (const auto& x : rsols) {
        c.require(compose(x, a) == b, [&] {
          return "right solution does not recompose for " + pair_str(a, b);
        });
      }
      for (const auto& x : universe) {
        if (compose(x, a) == b) {
          c.require(rseen.count(x) == 1, [&] {
            return "right solver misses " + x.str() + " for " + pair_str(a, b);
          });
        }
      }
    }
  }
  return c.result("f-property", "division equations solved completely");
}

CheckResult check_mg(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  for (const auto& g : elems) {
    for (const auto& d : elems) {
      c.require(mg_image(compose(g, d)) == mg_image(g) + mg_image(d), [&] {
        return "image not additive for " + pair_str(g, d);
      });
    }
  }

  auto probes = enumerate_elements({2, 3});
  for (const auto& g : probes) {
    for (const auto& d : probes) {
      auto rel = mg_related(g, d);
      bool found = false;
      int first_m = 0;
      for (int m = 1; m <= 12 && !found; ++m) {
        auto e = Isometry::epsilon({}, 0, m - 1);  // identity of [m)
        if (compose(e, g) == compose(e, d)) {
          found = true;
          first_m = m;
        }
      }
      c.require(rel.related == found, [&] {
        return "congruence disagrees with witness search for " +
               pair_str(g, d);
      });
      c.require(rel.related == (mg_image(g) == mg_image(d)),
                [&] { return "congruence differs from image equality for " +
                             pair_str(g, d); });
      if (rel.related) {
        c.require(rel.witness.has_value() &&
                      *rel.witness == Isometry::epsilon({}, 0, first_m - 1),
                  [&] { return "witness not minimal for " + pair_str(g, d); });
      } else {
        c.require(!rel.witness.has_value(),
                  [&] { return "witness reported for unrelated pair " +
                               pair_str(g, d); });
      }
    }
  }
  return c.result("mg", "least group congruence");
}

CheckResult check_simple_witness(const Options&) {
  Checker c;
  auto probes = enumerate_elements({2, 3});
  for (const auto& g : probes) {
    for (const auto& d : probes) {
      auto [u, v] = simple_witness(g, d);
      c.require(compose(compose(u, g), v) == d,
                [&] { return "u g v != d for " + pair_str(g, d); });
    }
  }
  return c.result("lemma-2.1", "two-sided divisibility witnesses");
}

struct Bitmask {
  std::vector<std::uint64_t> words;

  explicit Bitmask(std::size_t bits) : words((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  void merge(const Bitmask& other) {
    for (std::size_t w = 0; w < words.size(); ++w) words[w] |= other.words[w];
  }
  void clear() { std::fill(words.begin(), words.end(), 0); }
};

CheckResult check_shrinking(const Options&) {
  Checker c;
  auto probes = enumerate_elements({2, 3});
  auto universe = enumerate_elements({4, 6});
  const std::size_t np = probes.size();
  const std::size_t nu = universe.size();

  std::map<Isometry, int> probe_id;
  for (std::size_t k = 0; k < np; ++k)
    probe_id[probes[k]] = static_cast<int>(k);
  std::map<Isometry, int> universe_id;
  for (std::size_t x = 0; x < nu; ++x)
    universe_id[universe[x]] = static_cast<int>(x);

  // away from zero the multiplication is plain composition
  for (std::size_t x = 0; x < np; ++x) {
    for (std::size_t y = 0; y < np; ++y) {
      auto prod = zmul(ZElem(probes[x]), ZElem(probes[y]));
      c.require(!prod.is_zero() &&
                    prod.elem() == compose(probes[x], probes[y]),
                [&] { return std::string("model breaks away from zero"); });
    }
    c.require(zmul(ZElem(probes[x]), ZElem()).is_zero() &&
                  zmul(ZElem(), ZElem(probes[x])).is_zero(),
              [&] { return std::string("zero is not absorbing"); });
  }

  long long mutations = 0;
  for (std::size_t gi = 0; gi < np; ++gi) {
    const Isometry& g = probes[gi];

    // where multiplying by g lands inside the probe window, per side
    std::vector<int> lid(nu, -1), rid(nu, -1), as_probe(nu, -1);
    for (std::size_t x = 0; x < nu; ++x) {
      auto it = probe_id.find(compose(g, universe[x]));
      if (it != probe_id.end()) lid[x] = it->second;
      it = probe_id.find(compose(universe[x], g));
      if (it != probe_id.end()) rid[x] = it->second;
      it = probe_id.find(universe[x]);
      if (it != probe_id.end()) as_probe[x] = it->second;
    }

    // per excluded point k: the slice the solvers cut out of the window,
    // and the window members whose product with g actually hits k
    std::vector<Bitmask> cut(np, Bitmask(nu));
    std::vector<std::vector<int>> dangerous(np);
    for (std::size_t ki = 0; ki < np; ++ki) {
      for (const auto& x : solve_left(g, probes[ki])) {
        auto it = universe_id.find(x);
        if (it != universe_id.end()) cut[ki].set(it->second);
      }
      for (const auto& x : solve_right(g, probes[ki])) {
        auto it = universe_id.find(x);
        if (it != universe_id.end()) cut[ki].set(it->second);
      }
      for (std::size_t x = 0; x < nu; ++x) {
        if (lid[x] == static_cast<int>(ki) || rid[x] == static_cast<int>(ki)) {
          c.require(cut[ki].test(x), [&] {
            return "solver slice misses " + universe[x].str() + " for " +
                   pair_str(g, probes[ki]);
          });
          dangerous[ki].push_back(static_cast<int>(x));
        }
      }
    }

    // every excluded set of size <= 3: the shrunk neighborhood keeps all
    // products of g with its members away from the excluded points
    Bitmask v(nu);
    auto run_instance = [&](std::initializer_list<int> excluded) {
      v.clear();
      for (int k : excluded) v.merge(cut[k]);
      for (int k : excluded) {
        for (int x : dangerous[k]) {
          bool removed = v.test(x);
          bool x_itself_excluded =
              as_probe[x] >= 0 &&
              std::find(excluded.begin(), excluded.end(), as_probe[x]) !=
                  excluded.end();
          c.require(removed || x_itself_excluded, [&] {
            return "shrunk neighborhood leaks " + universe[x].str() +
                   " for g = " + g.str();
          });
        }
      }
    };
    run_instance({});
    for (int k1 = 0; k1 < static_cast<int>(np); ++k1) {
      run_instance({k1});
      for (int k2 = k1 + 1; k2 < static_cast<int>(np); ++k2) {
        run_instance({k1, k2});
        for (int k3 = k2 + 1; k3 < static_cast<int>(np); ++k3) {
          run_instance({k1, k2, k3});
        }
      }
    }

    // the public interface agrees on singletons, and the contract is
    // sensitive: putting one removed element back breaks it
    for (std::size_t ki = 0; ki < np; ++ki) {
      CofiniteNbhd u(std::vector<Isometry>{probes[ki]});
      auto shrunk = shrink_neighborhood(g, u);
      c.require(products_stay_inside(g, shrunk, u, {4, 6}), [&] {
        return "shrink violates the containment contract for " +
               pair_str(g, probes[ki]);
      });
      c.require(check_separate_continuity(g, u, {4, 6}), [&] {
        return "separate continuity check fails for " +
               pair_str(g, probes[ki]);
      });
      for (std::size_t x = 0; x < nu; ++x) {
        if (cut[ki].test(x)) {
          c.require(std::binary_search(shrunk.excluded.begin(),
                                       shrunk.excluded.end(), universe[x]),
                    [&] {
                      return "shrink drops the solver slice member " +
                             universe[x].str();
                    });
        }
      }
      if (!dangerous[ki].empty()) {
        const Isometry& back_in = universe[dangerous[ki][0]];
        std::vector<Isometry> mutated;
        for (const auto& y : shrunk.excluded) {
          if (!(y == back_in)) mutated.push_back(y);
        }
        c.require(!products_stay_inside(g, CofiniteNbhd(mutated), u, {4, 6}),
                  [&] {
                    return "contract is insensitive to restoring " +
                           back_in.str();
                  });
        ++mutations;
      }
    }
  }
  c.require(mutations > 0,
            [&] { return std::string("mutation test never ran"); });
  return c.result("lemma-3.9", "zero neighborhoods shrink correctly");
}

CheckResult check_parser(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  for (const auto& g : elems) {
    auto text = format(g);
    auto back = eval_text(text);
    c.require(!back.is_zero() && back.elem() == g,
              [&] { return "round trip fails for " + text; });
  }
  {
    auto z = eval_text(format(ZElem()));
    c.require(z.is_zero(), [&] { return std::string("zero round trip"); });
  }

  struct Probe {
    const char* text;
    std::size_t position;
  };
  const Probe bad[] = {
      {"", 0},        {")", 0},       {"c", 0},
      {"a^", 2},      {"a^x", 2},     {"(a b", 4},
      {"a)", 1},      {"eps(B=)", 4}, {"eps(A={1};n0=3)[0", 17},
      {"epsilon", 3}, {"a ^", 3},
  };
  for (const auto& probe : bad) {
    bool threw = false;
    try {
      parse_word(probe.text);
    } catch (const SyntaxError& err) {
      threw = true;
      c.require(err.position == probe.position, [&] {
        std::ostringstream os;
        os << "wrong error position for '" << probe.text << "': got "
           << err.position;
        return os.str();
      });
    }
    c.require(threw,
              [&] { return std::string("no error for '") + probe.text + "'"; });
  }

  std::mt19937 rng(opt.seed + 1);
  const std::string alphabet = "ab IZ^(){};,=eps[)0123456789n";
  int parsed_ok = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::string text;
    std::size_t len = rng() % 41;
    for (std::size_t k = 0; k < len; ++k) {
      text += alphabet[rng() % alphabet.size()];
    }
    bool survived = true;
    try {
      eval_word(parse_word(text));
      ++parsed_ok;
    } catch (const SyntaxError&) {
    } catch (const ConstraintError&) {
    } catch (...) {
      survived = false;
    }
    c.require(survived,
              [&] { return "fuzz input escapes the parser errors: " + text; });
  }
  c.require(parsed_ok < 1000,
            [&] { return std::string("fuzzing never produced an error"); });
  return c.result("parser", "word language round-trip and fuzzing");
}

CheckResult check_green(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  for (const auto& g : elems) {
    for (const auto& d : elems) {
      c.require(green_R(g, d) == (g.dom() == d.dom()),
                [&] { return "R mismatch for " + pair_str(g, d); });
      c.require(green_L(g, d) == (g.ran() == d.ran()),
                [&] { return "L mismatch for " + pair_str(g, d); });
      c.require(green_H(g, d) == (green_R(g, d) && green_L(g, d)),
                [&] { return "H mismatch for " + pair_str(g, d); });
      bool translated = false;
      for (int k = -10; k <= 10 && !translated; ++k) {
        try {
          translated = g.dom().translate(k) == d.dom();
        } catch (const UnderflowError&) {
        }
      }
      c.require(green_D(g, d) == translated,
                [&] { return "D mismatch for " + pair_str(g, d); });
    }
  }
  return c.result("green", "Green relations on domains and ranges");
}

CheckResult check_comparable_cosets(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  for (const auto& g : elems) {
    for (const auto& d : elems) {
      if (ll_leq(g, d) || ll_leq(d, g)) {
        c.require(coset_of(g) == coset_of(d), [&] {
          return "comparable pair in different cosets: " + pair_str(g, d);
        });
      } else {
        c.require(true, [] { return std::string(); });
      }
    }
  }
  return c.result("cor-2.15", "comparable elements share a coset");
}

CheckResult check_conjugation(const Options& opt) {
  Checker c;
  auto elems = enumerate_elements(opt.bounds);
  for (const auto& g : elems) {
    for (int k = 0; k <= 8; ++k) {
      auto down = conjugate_down(g, k);
      auto direct = compose(compose(pow(Isometry::beta(), k), g),
                            pow(Isometry::alpha(), k));
      c.require(down == direct,
                [&] { return "conjugate_down formula fails: " + g.str(); });
      c.require(down.dom() == g.dom().translate(k) &&
                    down.shift() == g.shift(),
                [&] { return "conjugate_down translation fails: " + g.str(); });
    }
  }
  return c.result("lemma-2.9", "conjugation translates domains");
}

CheckResult check_symmetric_difference(const Options&) {
  Checker c;
  auto probes = enumerate_elements({2, 1});
  std::vector<std::vector<Isometry>> pools;
  pools.push_back({});
  for (std::size_t i = 0; i < probes.size(); ++i) {
    pools.push_back({probes[i]});
    for (std::size_t j = i + 1; j < probes.size(); ++j) {
      pools.push_back({probes[i], probes[j]});
    }
  }
  for (const auto& left : pools) {
    for (const auto& right : pools) {
      CofiniteNbhd u(left), v(right);
      auto [only_u, only_v] = symmetric_difference_check(u, v);
      std::set<Isometry> expect_u, expect_v;
      for (const auto& x : v.excluded) {
        if (u.contains(ZElem(x))) expect_u.insert(x);
      }
      for (const auto& x : u.excluded) {
        if (v.contains(ZElem(x))) expect_v.insert(x);
      }
      c.require(std::set<Isometry>(only_u.begin(), only_u.end()) == expect_u,
                [&] { return std::string("U side of difference wrong"); });
      c.require(std::set<Isometry>(only_v.begin(), only_v.end()) == expect_v,
                [&] { return std::string("V side of difference wrong"); });
    }
  }
  return c.result("lemma-3.4", "neighborhoods differ finitely");
}

}  // namespace

std::vector<std::string> check_ids() {
  return {"axioms",     "prop-2.4",   "bicyclic",   "lemma-2.12",
          "prop-2.6",   "prop-2.7",   "lemma-2.14", "orders",
          "lemma-2.8",  "prop-2.13",  "lemma-2.16", "chains",
          "f-property", "mg",         "lemma-2.1",  "lemma-2.9",
          "cor-2.15",   "green",      "lemma-3.4",  "lemma-3.9",
          "parser"};
}

CheckResult run_check(const std::string& id, const Options& opt) {
  if (id == "axioms") return check_axioms(opt);
  if (id == "prop-2.4" || id == "remark-2.5") return check_canonical(opt);
  if (id == "bicyclic" || id == "prop-2.3") return check_bicyclic(opt);
  if (id == "lemma-2.12") return check_commutation(opt);
  if (id == "prop-2.6") return check_natural_order(opt);
  if (id == "prop-2.7") return check_order_coincidence(opt);
  if (id == "lemma-2.14") return check_ll_decision(opt);
  if (id == "orders") {
    return merge("orders", "natural and shifted partial orders",
                 {check_natural_order(opt), check_order_coincidence(opt),
                  check_ll_decision(opt)});
  }
  if (id == "lemma-2.8") return check_chains(opt);
  if (id == "prop-2.13") return check_coset_stability(opt);
  if (id == "lemma-2.16") return check_sandwich(opt);
  if (id == "chains") {
    return merge("chains", "descending chains, cosets, sandwiching",
                 {check_chains(opt), check_coset_stability(opt),
                  check_sandwich(opt)});
  }
  if (id == "f-property" || id == "def-3.1") return check_solvers(opt);
  if (id == "mg") return check_mg(opt);
  if (id == "lemma-2.1") return check_simple_witness(opt);
  if (id == "lemma-2.9") return check_conjugation(opt);
  if (id == "cor-2.15") return check_comparable_cosets(opt);
  if (id == "green") return check_green(opt);
  if (id == "lemma-3.4") return check_symmetric_difference(opt);
  if (id == "lemma-3.9") return check_shrinking(opt);
  if (id == "parser") return check_parser(opt);
  throw InvalidParameters("unknown check id: " + id);
}

std::vector<CheckResult> run_all(const Options& opt) {
  return {
      run_check("axioms", opt),     run_check("prop-2.4", opt),
      run_check("bicyclic", opt),   run_check("lemma-2.12", opt),
      run_check("orders", opt),     run_check("chains", opt),
      run_check("f-property", opt), run_check("mg", opt),
      run_check("lemma-2.1", opt),  run_check("lemma-3.9", opt),
      run_check("parser", opt),
  };
}

}  // namespace ison::verify
