#include <doctest.h>

#include <random>

#include "higman/error.hpp"
#include "higman/freeword.hpp"
#include "higman/syntax.hpp"
#include "higman/word.hpp"

using namespace higman;
using efun::FinSuppFn;

namespace {

Word W(std::string_view s) { return parse_word(s); }
Word L(std::string_view s) { return Word::gen(plain(s)); }

Word random_word(std::mt19937_64& rng, const std::vector<Word>& alphabet, std::size_t max_len) {
  Word w;
  const auto n = rng() % (max_len + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = alphabet[rng() % alphabet.size()];
    w *= (rng() & 1) ? x.inverse() : x;
  }
  return w;
}

// Free reduction by a stack, independent of Word's own reduction.
std::vector<Letter> stack_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> st;
  for (const auto& l : in) {
    if (!st.empty() && st.back().gen == l.gen && st.back().inverse != l.inverse) {
      st.pop_back();
    } else {
      st.push_back(l);
    }
  }
  return st;
}

}  // namespace

TEST_CASE("reduction") {
  const Letter a{plain("a"), false}, b{plain("b"), false};
  CHECK(reduce(std::vector<Letter>{a, b, b.inv()}) == L("a"));
  std::mt19937_64 rng(7);
  const std::vector<Word> abc = {L("a"), L("b"), L("c")};
  for (int s = 0; s < 200; ++s) {
    const auto w = random_word(rng, abc, 12);
    CHECK((w * w.inverse()).empty());
    CHECK(inv(inv(w)) == w);
    CHECK(conj(w, Word{}) == w);
    std::vector<Letter> raw;
    for (const auto& l : w.letters()) raw.push_back(l);
    const auto v = random_word(rng, abc, 12);
    for (const auto& l : v.letters()) raw.push_back(l);
    const auto st = stack_reduce(raw);
    CHECK(mul(w, v) == Word(std::span<const Letter>(st)));
  }
  CHECK(commutator(L("a"), L("b")) == W("a^-1 b^-1 a b"));
  Alphabet al;
  al.add_plain("a");
  CHECK_THROWS_AS(reduce(std::vector<Letter>{b}, al), UnknownGenerator);
}

TEST_CASE("generator names and order") {
  CHECK(gen_name(indexed("b", -1)) == "b_-1");
  CHECK(gen_name(indexed("b", 3)) == "b3");
  CHECK(name_less(plain("a"), plain("b")));
  CHECK(name_less(indexed("b", 2), indexed("b", 10)));
}

TEST_CASE("encode") {
  const auto f = FinSuppFn::from_tuple({2, 5, 3});
  CHECK(encode(Kind::B, f, 3, Mode::Abstract) == W("b0^2 b1^5 b2^3"));
  CHECK(encode(Kind::A, f, 3, Mode::Abstract) == W("b2^-3 b1^-5 b0^-2 a b0^2 b1^5 b2^3"));
  CHECK(encode(Kind::A, f, 3, Mode::Abstract) == conj(L("a"), encode(Kind::B, f, 3, Mode::Abstract)));
  CHECK(encode(Kind::A, FinSuppFn{}, 1) == L("a"));
  CHECK(encode(Kind::B, FinSuppFn{}, 1).empty());
  CHECK(b_gen(2) == W("c^-2 b c^2"));
  CHECK(h_gen(-1) == W("k h k^-1"));
  CHECK(encode(Kind::G, f, 3, Mode::Abstract) == W("g^(h0^2 h1^5 h2^3)"));
  CHECK(encode(Kind::Z, f, 3, Mode::Abstract) == W("g^(h0^2 h1^5 h2^3) b2^-3 b1^-5 b0^-2"));
  CHECK_THROWS_AS(encode(Kind::Z, FinSuppFn::from_tuple({0, 0, 0, 1}), 3), SupportOutOfRange);
  CHECK_THROWS_AS(encode(Kind::V, efun::normalize({{-1, 1}}), 3), SupportOutOfRange);
  // expanded b_f equals the abstract one with b_i substituted
  GenMap sub;
  sub.fix_others();
  sub.set_family("b", [](std::int32_t i) { return b_gen(i); });
  CHECK(apply(sub, encode(Kind::A, f, 3, Mode::Abstract)) == encode(Kind::A, f, 3));
}

TEST_CASE("apply") {
  GenMap mu;
  mu.set(plain("b"), W("b^c")).set(plain("c"), L("c"));
  GenMap chi;
  chi.set(plain("b"), L("b")).set(plain("c"), W("c^-1"));
  for (int i = -3; i <= 3; ++i) {
    CHECK(apply(mu, b_gen(i)) == b_gen(i + 1));
    CHECK(apply(chi, b_gen(i)) == b_gen(-i));
  }
  GenMap id;
  id.fix_others();
  CHECK(apply(id, W("a b^-2 c")) == W("a b^-2 c"));
  CHECK_THROWS_AS(apply(mu, L("q")), UnknownGenerator);
}

TEST_CASE("collect") {
  GenSet X, Y;
  X.add_family("x");
  Y.add_family("y");
  const auto w = W("x2^-1 y1^3 y2 x1^2 x3");
  const auto r = collect(w, X, Y);
  const auto v = W("y1^3 y2").inverse();
  REQUIRE(r.factors.size() == 4);
  CHECK(r.factors[0] == Factor{indexed("x", 2), true, Word{}});
  CHECK(r.factors[1] == Factor{indexed("x", 1), false, v});
  CHECK(r.factors[2] == Factor{indexed("x", 1), false, v});
  CHECK(r.factors[3] == Factor{indexed("x", 3), false, v});
  CHECK(r.tail == W("y1^3 y2"));
  CHECK(r.product() == w);

  const auto y = collect(W("y1 y2^-1"), X, Y);
  CHECK(y.factors.empty());
  CHECK(y.tail == W("y1 y2^-1"));

  const auto xy = collect(W("y^-2 x y^2 x^-1 y^5"), GenSet{plain("x")}, GenSet{plain("y")});
  CHECK(xy.tail == W("y^5"));
  CHECK(xy.product() == W("y^-2 x y^2 x^-1 y^5"));
  for (const auto& f : xy.factors) CHECK((f.v.empty() || f.v.support() == std::set<Gen>{plain("y")}));

  CHECK_THROWS_AS(collect(W("x1 z"), X, Y), ForeignGenerator);
  CHECK_THROWS_AS(collect(W("x1"), X, X), Error);
}

TEST_CASE("word syntax round trip") {
  std::mt19937_64 rng(11);
  const std::vector<Word> alphabet = {L("a"), L("b"), Word::gen(indexed("b", -2)), Word::gen(indexed("b", 4)),
                                      Word::gen(indexed("h", 0))};
  for (int s = 0; s < 300; ++s) {
    const auto w = random_word(rng, alphabet, 10);
    CHECK(parse_word(format_word(w)) == w);
    const auto c = conj(w, random_word(rng, alphabet, 4));
    CHECK(parse_word(format_word(c)) == c);
  }
  CHECK(format_word(Word{}) == "1");
  CHECK(parse_word("1").empty());
  CHECK(parse_word("-a") == parse_word("a^-1"));
  CHECK(parse_word("[a,b]") == commutator(L("a"), L("b")));
  CHECK(parse_word("a^-(b)") == W("b^-1 a^-1 b"));
  CHECK(parse_word("b_-1") == Word::gen(indexed("b", -1)));
  CHECK_THROWS_AS(parse_word("a^("), ParseError);
  CHECK_THROWS_AS(parse_word("a $"), ParseError);
}

TEST_CASE("expression and tuple syntax round trip") {
  for (const char* s : {"Z", "S", "E3", "iota(tau(S),zeta(Z))", "omega2(upsilon(S,Z))", "sigma(sigma(sigma(rho(pi(Z)))))",
                        "theta(E4)"}) {
    CHECK(efun::to_string(parse_expr(s)) == s);
    CHECK(parse_expr(efun::to_string(parse_expr(s))) == parse_expr(s));
  }
  CHECK(parse_expr(" iota ( tau(S) , zeta( Z ) ) ") == parse_expr("iota(tau(S),zeta(Z))"));
  CHECK_THROWS_AS(parse_expr("omega(S)"), ParseError);
  CHECK_THROWS_AS(parse_expr("E"), ParseError);
  CHECK_THROWS_AS(parse_expr("foo(S)"), ParseError);
  for (const char* s : {"(0)", "(1,2)", "(0,0,7,-8,5,5,5,5)", "{-1:1}", "{-3:2,4:-1}"}) {
    CHECK(efun::format(parse_fn(s)) == s);
  }
  CHECK(parse_fn("(1,0)") == parse_fn("(1)"));
  CHECK_THROWS_AS(parse_fn("(1,"), ParseError);
}

TEST_CASE("homomorphism and reduction properties") {
  std::mt19937_64 rng(13);
  const std::vector<Word> abc = {L("a"), L("b"), L("c")};
  for (int s = 0; s < 100; ++s) {
    GenMap h;
    for (const char* x : {"a", "b", "c"}) h.set(plain(x), random_word(rng, abc, 4));
    const auto u = random_word(rng, abc, 10), v = random_word(rng, abc, 10);
    CHECK(apply(h, mul(u, v)) == mul(apply(h, u), apply(h, v)));
    std::vector<Letter> raw;
    for (const auto& l : u.letters()) raw.push_back(l);
    for (const auto& l : v.letters()) raw.push_back(l);
    CHECK(reduce(raw).size() <= raw.size());
  }
  for (int s = 0; s < 100; ++s) {
    const auto m = static_cast<std::int64_t>(1 + rng() % 4);
    std::map<std::int64_t, std::int64_t> vals;
    for (std::int64_t i = 0; i < m; ++i) vals[i] = static_cast<std::int64_t>(rng() % 11) - 5;
    const auto f = efun::normalize(vals);
    CHECK(encode(Kind::A, f, m) == conj(L("a"), encode(Kind::B, f, m)));
    const auto up = efun::bump(f, m - 1, efun::Dir::Plus);
    CHECK(encode(Kind::V, f, m) == mul(encode(Kind::Z, up, m), inv(encode(Kind::Z, f, m))));
  }
}
