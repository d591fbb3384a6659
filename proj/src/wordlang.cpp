#include "ison/wordlang.hpp"

#include <cctype>
#include <sstream>

#include "ison/errors.hpp"

namespace ison {

namespace {

constexpr int kMaxNat = 100000000;
constexpr int kMaxDepth = 200;

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  GenWord run() {
    GenWord w = word(0);
    skip_space();
    if (pos_ < text_.size()) fail("end of input");
    return w;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(pos_, expected);
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!at(c)) fail(std::string("'") + c + "'");
    ++pos_;
  }

  bool atom_ahead() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == 'a' || c == 'b' || c == 'I' || c == 'Z' || c == 'e' ||
           c == '(';
  }

  int nat() {
    skip_space();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("a number");
    }
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxNat) throw ConstraintError("number too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  GenWord word(int depth) {
    if (depth > kMaxDepth) fail("shallower nesting");
    GenWord acc = term(depth);
    while (atom_ahead()) {
      GenWord product;
      product.kind = GenWord::Kind::product;
      product.children.push_back(std::move(acc));
      product.children.push_back(term(depth));
      acc = std::move(product);
    }
    return acc;
  }

  GenWord term(int depth) {
    GenWord base = atom(depth);
    if (at('^')) {
      ++pos_;
      GenWord power;
      power.kind = GenWord::Kind::power;
      power.exponent = nat();
      power.children.push_back(std::move(base));
      return power;
    }
    return base;
  }

  GenWord atom(int depth) {
    skip_space();
    if (pos_ >= text_.size()) fail("an atom (a, b, I, Z, eps or '(')");
    switch (text_[pos_]) {
      case 'a':
        ++pos_;
        return GenWord::atom(GenWord::Kind::a);
      case 'b':
        ++pos_;
        return GenWord::atom(GenWord::Kind::b);
      case 'I':
        ++pos_;
        return GenWord::atom(GenWord::Kind::id);
      case 'Z':
        ++pos_;
        return GenWord::atom(GenWord::Kind::zero);
      case 'e':
        return eps();
      case '(': {
        ++pos_;
        GenWord inner = word(depth + 1);
        expect(')');
        return inner;
      }
      default:
        fail("an atom (a, b, I, Z, eps or '(')");
    }
  }

  GenWord eps() {
    if (text_.compare(pos_, 3, "eps") != 0) {
      fail("an atom (a, b, I, Z, eps or '(')");
    }
    pos_ += 3;
    expect('(');
    if (!at('A')) fail("'A'");
    ++pos_;
    expect('=');
    expect('{');
    std::vector<int> members;
    if (!at('}')) {
      members.push_back(nat());
      while (at(',')) {
        ++pos_;
        members.push_back(nat());
      }
    }
    expect('}');
    expect(';');
    skip_space();
    if (text_.compare(pos_, 2, "n0") != 0) fail("'n0'");
    pos_ += 2;
    expect('=');
    GenWord out;
    out.kind = GenWord::Kind::eps;
    out.A = std::move(members);
    out.n0 = nat();
    expect(')');
    expect('[');
    out.offset = nat();
    expect(')');
    try {
      Isometry::epsilon(out.A, out.n0, out.offset);
    } catch (const InvalidParameters& e) {
      throw ConstraintError(e.what());
    }
    return out;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

GenWord parse_word(const std::string& text) { return Parser(text).run(); }

ZElem eval_word(const GenWord& w) {
  switch (w.kind) {
    case GenWord::Kind::a:
      return ZElem(Isometry::alpha());
    case GenWord::Kind::b:
      return ZElem(Isometry::beta());
    case GenWord::Kind::id:
      return ZElem(Isometry::identity());
    case GenWord::Kind::zero:
      return ZElem::zero();
    case GenWord::Kind::eps:
      return ZElem(Isometry::epsilon(w.A, w.n0, w.offset));
    case GenWord::Kind::product:
      return zmul(eval_word(w.children[0]), eval_word(w.children[1]));
    case GenWord::Kind::power: {
      ZElem acc{Isometry::identity()};
      ZElem base = eval_word(w.children[0]);
      for (int k = 0; k < w.exponent; ++k) acc = zmul(acc, base);
      return acc;
    }
  }
  throw Error("unreachable word kind");
}

ZElem eval_text(const std::string& text) {
  return eval_word(parse_word(text));
}

std::string format(const Isometry& g) {
  auto c = g.canonical();
  if (c.A.empty() && c.i == 0 && c.j == 0) return "I";
  std::ostringstream os;
  bool first = true;
  if (!c.A.empty()) {
    os << "eps(A={";
    for (std::size_t k = 0; k < c.A.size(); ++k) {
      if (k > 0) os << ',';
      os << c.A[k];
    }
    os << "};n0=" << c.n0 << ")[" << c.i << ')';
    first = false;
  }
  if (c.i > 0) {
    if (!first) os << ' ';
    os << "b^" << c.i;
    first = false;
  }
  if (c.j > 0) {
    if (!first) os << ' ';
    os << "a^" << c.j;
  }
  return os.str();
}

std::string format(const ZElem& x) {
  return x.is_zero() ? "Z" : format(x.elem());
}

}  // namespace ison
