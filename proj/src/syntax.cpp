#include "higman/syntax.hpp"

#include <cctype>
#include <map>

#include "higman/error.hpp"

namespace higman {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char peek_raw(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string letters() {
    skip();
    const auto start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  std::optional<std::int64_t> digits_raw() {
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    try {
      return std::stoll(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }
  std::int64_t integer() {
    skip();
    bool neg = false;
    if (peek_raw() == '-' || peek_raw() == '+') {
      neg = peek_raw() == '-';
      ++pos_;
    }
    auto v = digits_raw();
    if (!v) fail("expected an integer");
    return neg ? -*v : *v;
  }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

using efun::SetExpr;

SetExpr expr(Lexer& lx) {
  const auto name = lx.letters();
  if (name.empty()) lx.fail("expected an expression");
  if (name == "Z") return SetExpr::zero();
  if (name == "S") return SetExpr::succ();
  if (name == "E") {
    const auto m = lx.integer();
    if (m < 1) lx.fail("E needs a positive index");
    return SetExpr::box(m);
  }
  if (name == "iota" || name == "upsilon") {
    lx.expect('(');
    auto l = expr(lx);
    lx.expect(',');
    auto r = expr(lx);
    lx.expect(')');
    return name == "iota" ? SetExpr::iota(std::move(l), std::move(r)) : SetExpr::upsilon(std::move(l), std::move(r));
  }
  static const std::map<std::string, SetExpr (*)(SetExpr)> unary = {
      {"rho", SetExpr::rho},   {"sigma", SetExpr::sigma}, {"tau", SetExpr::tau},
      {"theta", SetExpr::theta}, {"zeta", SetExpr::zeta},   {"pi", SetExpr::pi},
  };
  if (name == "omega") {
    const auto m = lx.integer();
    if (m < 1) lx.fail("omega needs a positive index");
    lx.expect('(');
    auto e = expr(lx);
    lx.expect(')');
    return SetExpr::omega(m, std::move(e));
  }
  auto it = unary.find(name);
  if (it == unary.end()) lx.fail("unknown operation '" + name + "'");
  lx.expect('(');
  auto e = expr(lx);
  lx.expect(')');
  return it->second(std::move(e));
}

// --- words -------------------------------------------------------------------

Word word(Lexer& lx);

Word primary(Lexer& lx) {
  const char c = lx.peek();
  if (c == '(') {
    lx.advance();
    Word w = word(lx);
    lx.expect(')');
    return w;
  }
  if (c == '[') {
    lx.advance();
    Word u = word(lx);
    lx.expect(',');
    Word v = word(lx);
    lx.expect(']');
    return commutator(u, v);
  }
  if (c == '1') {
    lx.advance();
    return {};
  }
  if (std::isalpha(static_cast<unsigned char>(c))) {
    const auto name = lx.letters();
    std::size_t look = 0;
    if (lx.peek_raw() == '_') look = 1;
    const bool neg = lx.peek_raw(look) == '-';
    if (std::isdigit(static_cast<unsigned char>(lx.peek_raw(look + (neg ? 1 : 0))))) {
      for (std::size_t i = 0; i < look + (neg ? 1 : 0); ++i) lx.advance();
      const auto idx = *lx.digits_raw();
      return Word::gen(indexed(name, static_cast<std::int32_t>(neg ? -idx : idx)));
    }
    if (look) lx.fail("expected an index after '_'");
    return Word::gen(plain(name));
  }
  lx.fail("expected a generator");
}

Word factor(Lexer& lx) {
  if (lx.accept('-')) return factor(lx).inverse();
  Word x = primary(lx);
  while (lx.peek_raw() == '^') {
    lx.advance();
    const char n0 = lx.peek_raw();
    const char n1 = lx.peek_raw(1);
    if (std::isdigit(static_cast<unsigned char>(n0))) {
      x = x.pow(*lx.digits_raw());
    } else if (n0 == '-' && std::isdigit(static_cast<unsigned char>(n1))) {
      lx.advance();
      x = x.pow(-*lx.digits_raw());
    } else if (n0 == '-') {
      lx.advance();
      x = conj(x.inverse(), primary(lx));
    } else {
      x = conj(x, primary(lx));
    }
  }
  return x;
}

Word word(Lexer& lx) {
  Word w;
  while (true) {
    const char c = lx.peek();
    if (c == '\0' || c == ')' || c == ']' || c == ',') break;
    w *= factor(lx);
  }
  return w;
}

std::string runs(std::span<const Letter> letters) {
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const auto n = static_cast<std::int64_t>(j - i);
    if (!out.empty()) out += ' ';
    out += gen_name(letters[i].gen);
    if (letters[i].inverse) {
      out += "^-" + std::to_string(n);
    } else if (n > 1) {
      out += "^" + std::to_string(n);
    }
    i = j;
  }
  return out;
}

}  // namespace

efun::SetExpr parse_expr(std::string_view text) {
  Lexer lx(text);
  auto e = expr(lx);
  if (!lx.done()) lx.fail("trailing input");
  return e;
}

efun::FinSuppFn parse_fn(std::string_view text) {
  Lexer lx(text);
  std::map<std::int64_t, std::int64_t> m;
  if (lx.accept('{')) {
    if (!lx.accept('}')) {
      do {
        const auto i = lx.integer();
        lx.expect(':');
        const auto v = lx.integer();
        if (!m.emplace(i, v).second) lx.fail("repeated index");
      } while (lx.accept(','));
      lx.expect('}');
    }
  } else {
    lx.expect('(');
    std::int64_t i = 0;
    do {
      m[i++] = lx.integer();
    } while (lx.accept(','));
    lx.expect(')');
  }
  if (!lx.done()) lx.fail("trailing input");
  return efun::normalize(m);
}

Word parse_word(std::string_view text) {
  Lexer lx(text);
  Word w = word(lx);
  if (!lx.done()) lx.fail("unexpected character");
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  const auto n = w.size();
  // largest u with w = u^-1 x^e u
  for (std::size_t k = (n - 1) / 2; k >= 1; --k) {
    const auto core = n - 2 * k;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = w[i] == w[n - 1 - i].inv();
    for (std::size_t i = k + 1; i < k + core && ok; ++i) ok = w[i] == w[k];
    if (!ok) continue;
    const auto conj_by = runs(w.letters().subspan(n - k));
    const auto& x = w[k];
    std::string head = gen_name(x.gen);
    if (core > 1) head += std::string("^") + (x.inverse ? "-" : "") + std::to_string(core) + "^(";
    else head += x.inverse ? "^-(" : "^(";
    return head + conj_by + ")";
  }
  return runs(w.letters());
}

}  // namespace higman
