// Command-line front end. Elements are written in the word language of
// the library (a, b, I, Z, eps(A={...};n0=..)[i), products, powers) and
// printed back in the same language, so every verb round-trips.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ison/congruence.hpp"
#include "ison/equations.hpp"
#include "ison/errors.hpp"
#include "ison/orders.hpp"
#include "ison/verify.hpp"
#include "ison/wordlang.hpp"
#include "ison/zerotop.hpp"

namespace {

using nlohmann::json;

struct Output {
  bool as_json = false;
  std::string verb;
  json inputs = json::object();
  json result;
  std::vector<std::string> lines;
  std::chrono::steady_clock::time_point start;

  void flush() const {
    if (as_json) {
      json rec;
      rec["verb"] = verb;
      rec["inputs"] = inputs;
      rec["result"] = result;
      rec["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - start)
              .count();
      std::cout << rec.dump() << "\n";
    } else {
      for (const auto& line : lines) std::cout << line << "\n";
    }
  }
};

ison::Isometry nonzero(const std::string& text, const char* what) {
  auto v = ison::eval_text(text);
  if (v.is_zero()) {
    throw ison::InvalidParameters(std::string(what) +
                                  " must be a nonzero element");
  }
  return v.elem();
}

ison::EnumBounds parse_bounds(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ison::InvalidParameters(
        "bounds must look like 'K,M' (max_complement,max_offset)");
  }
  try {
    int k = std::stoi(text.substr(0, comma));
    int m = std::stoi(text.substr(comma + 1));
    return ison::EnumBounds{k, m};
  } catch (const std::exception&) {
    throw ison::InvalidParameters("bounds must be two integers 'K,M'");
  }
}

ison::EnumBounds default_bounds() {
  if (const char* env = std::getenv("ISON_BOUNDS")) {
    return parse_bounds(env);
  }
  return ison::EnumBounds{};
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void report_checks(Output& out, const std::vector<ison::verify::CheckResult>& rs,
                   int& failures) {
  json arr = json::array();
  for (const auto& r : rs) {
    std::ostringstream os;
    os << r.id << "  " << r.title << "  " << (r.passed ? "PASS" : "FAIL")
       << "  (" << r.checks << " checks)";
    out.lines.push_back(os.str());
    if (!r.passed) {
      out.lines.push_back("  first failure: " + r.detail);
      ++failures;
    }
    json rec;
    rec["id"] = r.id;
    rec["title"] = r.title;
    rec["passed"] = r.passed;
    rec["checks"] = r.checks;
    rec["detail"] = r.detail;
    arr.push_back(rec);
  }
  out.result = arr;
}

}  // namespace

int main(int argc, char** argv) {
  Output out;
  out.start = std::chrono::steady_clock::now();
  int extra_exit = 0;

  CLI::App app{"exact arithmetic in the monoid of cofinite partial "
               "isometries of the positive integers"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", out.as_json, "emit one machine-readable record");

  std::string w1, w2, mode, id = "all", bounds_text;
  std::vector<std::string> excludes;
  int take = 10, max_complement = -1, max_offset = -1, max_i = 6;
  int samples = 100000;

  auto* c_eval = app.add_subcommand("eval", "evaluate a word");
  c_eval->add_option("word", w1, "word to evaluate")->required();
  c_eval->callback([&] {
    out.verb = "eval";
    out.inputs["word"] = w1;
    auto v = ison::eval_text(w1);
    out.lines.push_back(ison::format(v));
    out.result = ison::format(v);
  });

  auto* c_canon = app.add_subcommand("canon", "canonical form of a word");
  c_canon->add_option("word", w1, "word to canonicalize")->required();
  c_canon->callback([&] {
    out.verb = "canon";
    out.inputs["word"] = w1;
    auto cf = nonzero(w1, "word").canonical();
    out.lines.push_back(cf.str());
    json rec;
    rec["A"] = cf.A;
    rec["n0"] = cf.n0;
    rec["i"] = cf.i;
    rec["j"] = cf.j;
    rec["text"] = cf.str();
    out.result = rec;
  });

  auto* c_compose = app.add_subcommand("compose", "product of two words");
  c_compose->add_option("left", w1, "left factor (applied first)")->required();
  c_compose->add_option("right", w2, "right factor")->required();
  c_compose->callback([&] {
    out.verb = "compose";
    out.inputs["left"] = w1;
    out.inputs["right"] = w2;
    auto v = ison::zmul(ison::eval_text(w1), ison::eval_text(w2));
    out.lines.push_back(ison::format(v));
    out.result = ison::format(v);
  });

  auto* c_invert = app.add_subcommand("invert", "inverse of a word");
  c_invert->add_option("word", w1, "word to invert")->required();
  c_invert->callback([&] {
    out.verb = "invert";
    out.inputs["word"] = w1;
    auto v = ison::eval_text(w1);
    auto r = v.is_zero() ? v : ison::ZElem(v.elem().invert());
    out.lines.push_back(ison::format(r));
    out.result = ison::format(r);
  });

  auto* c_order = app.add_subcommand("order", "compare two elements");
  c_order->add_option("relation", mode, "nat or ll")
      ->required()
      ->check(CLI::IsMember({"nat", "ll"}));
  c_order->add_option("left", w1, "candidate smaller element")->required();
  c_order->add_option("right", w2, "candidate larger element")->required();
  c_order->callback([&] {
    out.verb = "order";
    out.inputs["relation"] = mode;
    out.inputs["left"] = w1;
    out.inputs["right"] = w2;
    auto g = nonzero(w1, "left");
    auto d = nonzero(w2, "right");
    bool r = mode == "nat" ? ison::natural_leq(g, d) : ison::ll_leq(g, d);
    out.lines.push_back(bool_str(r));
    out.result = r;
  });

  auto* c_chain = app.add_subcommand("chain", "walk the conjugation chain");
  c_chain->add_option("word", w1, "chain head")->required();
  c_chain->add_option("--take", take, "number of chain members")
      ->check(CLI::NonNegativeNumber);
  c_chain->callback([&] {
    out.verb = "chain";
    out.inputs["word"] = w1;
    out.inputs["take"] = take;
    auto members = ison::ChainCursor(nonzero(w1, "word")).take(take);
    json arr = json::array();
    for (const auto& m : members) {
      out.lines.push_back(ison::format(m));
      arr.push_back(ison::format(m));
    }
    out.result = arr;
  });

  auto* c_coset = app.add_subcommand("coset", "coset of an element");
  c_coset->add_option("word", w1, "element")->required();
  c_coset->callback([&] {
    out.verb = "coset";
    out.inputs["word"] = w1;
    auto cs = ison::coset_of(nonzero(w1, "word"));
    out.lines.push_back(cs.str());
    json rec;
    rec["A"] = cs.A;
    rec["n0"] = cs.n0;
    rec["text"] = cs.str();
    out.result = rec;
  });

  auto* c_mg = app.add_subcommand("mg", "image in the group quotient");
  c_mg->add_option("word", w1, "element")->required();
  c_mg->callback([&] {
    out.verb = "mg";
    out.inputs["word"] = w1;
    int img = ison::mg_image(nonzero(w1, "word"));
    out.lines.push_back(std::to_string(img));
    out.result = img;
  });

  auto* c_mgrel = app.add_subcommand("mg-rel",
                                     "congruence relation with witness");
  c_mgrel->add_option("left", w1, "first element")->required();
  c_mgrel->add_option("right", w2, "second element")->required();
  c_mgrel->callback([&] {
    out.verb = "mg-rel";
    out.inputs["left"] = w1;
    out.inputs["right"] = w2;
    auto rel = ison::mg_related(nonzero(w1, "left"), nonzero(w2, "right"));
    json rec;
    rec["related"] = rel.related;
    if (rel.related) {
      out.lines.push_back("related via " + ison::format(*rel.witness));
      rec["witness"] = ison::format(*rel.witness);
    } else {
      out.lines.push_back("not related");
      rec["witness"] = nullptr;
    }
    out.result = rec;
  });

  auto* c_green = app.add_subcommand("green", "Green relation test");
  c_green->add_option("relation", mode, "R, L, H or D")
      ->required()
      ->check(CLI::IsMember({"R", "L", "H", "D"}));
  c_green->add_option("left", w1, "first element")->required();
  c_green->add_option("right", w2, "second element")->required();
  c_green->callback([&] {
    out.verb = "green";
    out.inputs["relation"] = mode;
    out.inputs["left"] = w1;
    out.inputs["right"] = w2;
    auto g = nonzero(w1, "left");
    auto d = nonzero(w2, "right");
    bool r = mode == "R"   ? ison::green_R(g, d)
             : mode == "L" ? ison::green_L(g, d)
             : mode == "H" ? ison::green_H(g, d)
                           : ison::green_D(g, d);
    out.lines.push_back(bool_str(r));
    out.result = r;
  });

  auto* c_simple = app.add_subcommand("simple-witness",
                                      "u, v with u g v = d");
  c_simple->add_option("g", w1, "element to steer")->required();
  c_simple->add_option("d", w2, "target element")->required();
  c_simple->callback([&] {
    out.verb = "simple-witness";
    out.inputs["g"] = w1;
    out.inputs["d"] = w2;
    auto [u, v] = ison::simple_witness(nonzero(w1, "g"), nonzero(w2, "d"));
    out.lines.push_back("u = " + ison::format(u));
    out.lines.push_back("v = " + ison::format(v));
    json rec;
    rec["u"] = ison::format(u);
    rec["v"] = ison::format(v);
    out.result = rec;
  });

  auto* c_solve = app.add_subcommand("solve", "solve a division equation");
  c_solve->add_option("side", mode, "left: a x = b; right: x a = b")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  c_solve->add_option("a", w1, "known factor")->required();
  c_solve->add_option("b", w2, "product")->required();
  c_solve->callback([&] {
    out.verb = "solve";
    out.inputs["side"] = mode;
    out.inputs["a"] = w1;
    out.inputs["b"] = w2;
    auto a = nonzero(w1, "a");
    auto b = nonzero(w2, "b");
    auto sols = mode == "left" ? ison::solve_left(a, b)
                               : ison::solve_right(a, b);
    json arr = json::array();
    for (const auto& x : sols) {
      out.lines.push_back(ison::format(x));
      arr.push_back(ison::format(x));
    }
    out.result = arr;
  });

  auto* c_enum = app.add_subcommand("enum", "list a bounded window");
  c_enum->add_option("--max-complement", max_complement,
                     "cap on domain noise");
  c_enum->add_option("--max-offset", max_offset,
                     "cap on minimum offset and |shift|");
  c_enum->callback([&] {
    out.verb = "enum";
    auto b = default_bounds();
    if (max_complement >= 0) b.max_complement = max_complement;
    if (max_offset >= 0) b.max_offset = max_offset;
    out.inputs["max_complement"] = b.max_complement;
    out.inputs["max_offset"] = b.max_offset;
    json arr = json::array();
    for (const auto& g : ison::enumerate_elements(b)) {
      out.lines.push_back(ison::format(g));
      arr.push_back(ison::format(g));
    }
    out.result = arr;
  });

  auto* c_tau = app.add_subcommand("tau-ac", "zero neighborhood tools");
  c_tau->require_subcommand(1);
  auto* c_shrink = c_tau->add_subcommand(
      "shrink", "neighborhood that multiplies into the given one");
  c_shrink->add_option("g", w1, "multiplier")->required();
  c_shrink->add_option("--exclude", excludes,
                       "elements excluded from the target neighborhood");
  c_shrink->callback([&] {
    out.verb = "tau-ac shrink";
    out.inputs["g"] = w1;
    out.inputs["exclude"] = excludes;
    std::vector<ison::Isometry> ex;
    for (const auto& w : excludes) ex.push_back(nonzero(w, "excluded element"));
    auto v = ison::shrink_neighborhood(nonzero(w1, "g"),
                                       ison::CofiniteNbhd(ex));
    json arr = json::array();
    for (const auto& x : v.excluded) {
      out.lines.push_back(ison::format(x));
      arr.push_back(ison::format(x));
    }
    out.result = arr;
  });
  auto* c_tcheck = c_tau->add_subcommand(
      "check", "shrink, then validate products over a window");
  c_tcheck->add_option("g", w1, "multiplier")->required();
  c_tcheck->add_option("--exclude", excludes,
                       "elements excluded from the target neighborhood");
  c_tcheck->add_option("--bounds", bounds_text, "window as 'K,M'");
  c_tcheck->callback([&] {
    out.verb = "tau-ac check";
    out.inputs["g"] = w1;
    out.inputs["exclude"] = excludes;
    auto b = bounds_text.empty() ? default_bounds() : parse_bounds(bounds_text);
    out.inputs["bounds"] = {b.max_complement, b.max_offset};
    std::vector<ison::Isometry> ex;
    for (const auto& w : excludes) ex.push_back(nonzero(w, "excluded element"));
    bool okay = ison::check_separate_continuity(nonzero(w1, "g"),
                                                ison::CofiniteNbhd(ex), b);
    out.lines.push_back(bool_str(okay));
    out.result = okay;
  });

  auto* c_verify = app.add_subcommand("verify", "run lemma-indexed checks");
  c_verify->add_option("id", id, "check id or 'all'");
  c_verify->add_option("--bounds", bounds_text, "window as 'K,M'");
  c_verify->add_option("--max-i", max_i, "offset range for commutation rules")
      ->check(CLI::NonNegativeNumber);
  c_verify->add_option("--samples", samples, "sampled associativity triples")
      ->check(CLI::NonNegativeNumber);
  c_verify->callback([&] {
    out.verb = "verify";
    out.inputs["id"] = id;
    ison::verify::Options opt;
    opt.bounds = bounds_text.empty() || bounds_text == "default"
                     ? default_bounds()
                     : parse_bounds(bounds_text);
    opt.max_i = max_i;
    opt.samples = samples;
    out.inputs["bounds"] = {opt.bounds.max_complement, opt.bounds.max_offset};
    int failures = 0;
    if (id == "all") {
      report_checks(out, ison::verify::run_all(opt), failures);
    } else {
      auto known = ison::verify::check_ids();
      if (std::find(known.begin(), known.end(), id) == known.end()) {
        std::string valid;
        for (const auto& k : known) valid += " " + k;
        throw ison::InvalidParameters("unknown check id '" + id +
                                      "'; valid ids:" + valid);
      }
      report_checks(out, {ison::verify::run_check(id, opt)}, failures);
    }
    out.lines.push_back(failures == 0 ? "PASS" : "FAIL");
    extra_exit = failures == 0 ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "valid verbs: eval canon compose invert order chain coset "
                 "mg mg-rel green simple-witness solve enum tau-ac verify\n";
    return 2;
  } catch (const ison::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  out.flush();
  return extra_exit;
}
