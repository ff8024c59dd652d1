#include "higman/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "higman/construct.hpp"
#include "higman/efun.hpp"
#include "higman/error.hpp"
#include "higman/freeword.hpp"
#include "higman/subgroup.hpp"
#include "higman/syntax.hpp"

namespace higman::verify {

namespace {

using efun::EvalBounds;
using efun::FinSuppFn;
using efun::FunctionSet;
using efun::SetExpr;
using efun::Tuple;

using Rng = std::mt19937_64;

// Counts failures of a randomized or enumerated check.
struct Tally {
  int total = 0;
  int failed = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++total;
    if (ok) return;
    if (failed++ == 0) first = what();
  }
  std::string expected() const { return "0 failures in " + std::to_string(total); }
  std::string actual() const {
    auto s = std::to_string(failed) + " failures in " + std::to_string(total);
    if (failed) s += "; first: " + first;
    return s;
  }
};

struct Builder {
  CaseReport r;
  bool ok = true;

  void part(const std::string& expected, const std::string& actual, bool pass) {
    auto join = [](std::string& into, const std::string& s) { into += (into.empty() ? "" : "; ") + s; };
    join(r.expected, expected);
    join(r.actual, actual);
    ok = ok && pass;
  }
  void tally(const std::string& label, const Tally& t) {
    part(label + ": " + t.expected(), label + ": " + t.actual(), t.failed == 0);
  }
  void words(const std::string& label, const Word& expected, const Word& actual) {
    part(label + " = " + format_word(expected), label + " = " + format_word(actual), expected == actual);
  }
};

std::uint64_t case_seed(std::uint64_t seed, const std::string& id) {
  return seed ^ std::hash<std::string>{}(id);
}

Word word_of(std::string_view s) { return parse_word(s); }
Word letter(std::string_view name) { return Word::gen(plain(name)); }
Word bi(std::int64_t i) { return Word::gen(indexed("b", static_cast<std::int32_t>(i))); }

Word random_word(Rng& rng, const std::vector<Word>& alphabet, std::size_t max_len) {
  Word w;
  const auto len = 1 + rng() % max_len;
  for (std::size_t i = 0; i < len; ++i) {
    const Word& x = alphabet[rng() % alphabet.size()];
    w *= (rng() & 1) ? x.inverse() : x;
  }
  return w;
}

FinSuppFn random_fn(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t vmax) {
  std::map<std::int64_t, std::int64_t> m;
  for (auto i = lo; i < hi; ++i) {
    if (rng() % 3 == 0) continue;
    m[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * vmax + 1)) - vmax;
  }
  return efun::normalize(m);
}

std::string describe(const FunctionSet& s) {
  const auto n = s.size();
  std::ostringstream os;
  if (n <= 6) {
    os << '{';
    bool first = true;
    for (const auto& f : s.expand()) {
      os << (first ? "" : ", ") << efun::format(f);
      first = false;
    }
    os << '}';
  } else {
    os << n << " functions";
  }
  return os.str();
}

/// All functions fitting b whose window values satisfy `pred`.
FunctionSet filtered(const EvalBounds& b, const std::function<bool(const FinSuppFn&)>& pred) {
  std::vector<FinSuppFn> out;
  const auto w = static_cast<std::size_t>(b.width());
  std::vector<std::int64_t> vals(w, -b.vmax);
  while (true) {
    std::map<std::int64_t, std::int64_t> m;
    for (std::size_t c = 0; c < w; ++c) m[b.lo + static_cast<std::int64_t>(c)] = vals[c];
    auto f = efun::normalize(m);
    if (pred(f)) out.push_back(std::move(f));
    std::size_t c = 0;
    while (c < w && vals[c] == b.vmax) vals[c++] = -b.vmax;
    if (c == w) break;
    ++vals[c];
  }
  return FunctionSet::of(b, out);
}

/// Box set: coordinates in `free` take any value, all others are 0.
FunctionSet free_on(const EvalBounds& b, const std::function<bool(std::int64_t)>& free) {
  FunctionSet::Box box;
  for (auto i = b.lo; i < b.hi; ++i) box.push_back(free(i) ? std::nullopt : std::optional<std::int64_t>(0));
  return FunctionSet(b, {box});
}

void set_equal(Builder& b, const std::string& label, const FunctionSet& expected, const FunctionSet& actual) {
  b.part(label + " = " + describe(expected), label + " = " + describe(actual), actual.equals(expected));
}

// --- efun -----------------------------------------------------------------

void ex21a(Builder& b) {
  const EvalBounds bd;
  const auto exp = filtered({-1, 1, bd.vmax}, [](const FinSuppFn& f) { return f(-1) == f(0) + 1; });
  std::vector<FinSuppFn> lifted = exp.expand();
  set_equal(b, "rho(S)", FunctionSet::of(bd, lifted), enumerate(SetExpr::rho(SetExpr::succ()), bd));
}

void ex21b(Builder& b) {
  const EvalBounds bd;
  std::vector<FinSuppFn> fns;
  for (auto a = -bd.vmax; a <= bd.vmax; ++a) {
    auto f = FinSuppFn::from_tuple({a + 1, a});
    if (bd.fits(f)) fns.push_back(f);
  }
  const auto exp = FunctionSet::of(bd, fns);
  set_equal(b, "sigma(rho(S))", exp, enumerate(SetExpr::sigma(SetExpr::rho(SetExpr::succ())), bd));
  set_equal(b, "tau(S)", exp, enumerate(SetExpr::tau(SetExpr::succ()), bd));
}

void ex21c(Builder& b) {
  const EvalBounds bd;
  const auto zz = SetExpr::zeta(SetExpr::zero());
  set_equal(b, "zeta(Z)", free_on(bd, [](std::int64_t i) { return i == 0; }), enumerate(zz, bd));
  set_equal(b, "iota(tau(S),zeta(Z))", FunctionSet::of(bd, {FinSuppFn::from_tuple({1, 0})}),
            enumerate(SetExpr::iota(SetExpr::tau(SetExpr::succ()), zz), bd));
}

void ex21d(Builder& b) {
  const EvalBounds bd;
  auto sz = [](SetExpr e) { return SetExpr::sigma(SetExpr::zeta(std::move(e))); };
  set_equal(b, "sigma(zeta(Z))", free_on(bd, [](std::int64_t i) { return i == 1; }), enumerate(sz(SetExpr::zero()), bd));
  const auto e = SetExpr::zeta(sz(sz(SetExpr::zero())));
  set_equal(b, "zeta((sigma zeta)^2(Z))", free_on(bd, [](std::int64_t i) { return 0 <= i && i < 3; }), enumerate(e, bd));
  set_equal(b, "E3", free_on(bd, [](std::int64_t i) { return 0 <= i && i < 3; }), enumerate(SetExpr::box(3), bd));
}

void ex21e(Builder& b) {
  const EvalBounds bd;
  const auto pz = SetExpr::pi(SetExpr::zero());
  set_equal(b, "pi(Z)", free_on(bd, [](std::int64_t i) { return i > 0; }), enumerate(pz, bd));
  const auto e = SetExpr::sigma(SetExpr::sigma(SetExpr::sigma(SetExpr::rho(pz))));
  set_equal(b, "sigma^3 rho pi(Z)", free_on(bd, [](std::int64_t i) { return i < 3; }), enumerate(e, bd));
}

void ex21f(Builder& b) {
  const EvalBounds bd;
  set_equal(b, "theta(E4)", free_on(bd, [](std::int64_t i) { return 0 <= i && i < 2; }),
            enumerate(SetExpr::theta(SetExpr::box(4)), bd));
}

void ex21g(Builder& b) {
  const EvalBounds bd;
  const auto us = SetExpr::omega(2, SetExpr::upsilon(SetExpr::succ(), SetExpr::zero()));
  const auto v = member(FinSuppFn::from_tuple({7, 8, 0, 0, 2, 3}), us, bd);
  b.part("(7,8,0,0,2,3) in omega2(upsilon(S,Z)): In", "(7,8,0,0,2,3) in omega2(upsilon(S,Z)): " + efun::to_string(v.verdict),
         v.is_in());
  const auto empty = enumerate(SetExpr::omega(2, SetExpr::succ()), bd);
  b.part("omega2(S) = {}", "omega2(S) = " + describe(empty), empty.empty());
  const EvalBounds small{0, 4, 3};
  const auto exp = filtered(small, [](const FinSuppFn& f) {
    for (std::int64_t i = 0; i < 2; ++i) {
      const auto x = f(2 * i), y = f(2 * i + 1);
      if (!(y == x + 1 || (x == 0 && y == 0))) return false;
    }
    return true;
  });
  set_equal(b, "omega2(upsilon(S,Z)) on [0,4), V=3", exp, enumerate(us, small));
}

void ex21f5(Builder& b) {
  const auto f = efun::normalize({{2, 7}, {3, -8}, {4, 5}, {5, 5}, {6, 5}, {7, 5}});
  auto show = [](const FinSuppFn& g) { return efun::format(g); };
  const auto e1 = parse_fn("(0,0,7,-8,5,5,5,5)");
  const auto e2 = parse_fn("(0,0,7,-8,5,6,5,5)");
  const auto e3 = parse_fn("(0,0,7,-8,5,5,5,4)");
  b.part("f = " + show(e1), "f = " + show(f), f == e1);
  const auto up = efun::bump(f, 5, efun::Dir::Plus);
  b.part("f_5^+ = " + show(e2), "f_5^+ = " + show(up), up == e2);
  const auto down = efun::bump(f, 7, efun::Dir::Minus);
  b.part("f_7^- = " + show(e3), "f_7^- = " + show(down), down == e3);
}

// --- words and rewriting ----------------------------------------------------

void ex32(Builder& b, Rng& rng) {
  const auto sys = *catalog("GAMMA_EX32").system;
  const GenSet X{plain("b")}, Y{plain("t")};
  Tally t;
  for (int s = 0; s < 100; ++s) {
    const Word w = random_word(rng, {letter("b"), letter("t")}, 12);
    const auto col = collect(w, X, Y);
    Word base;
    for (const auto& f : col.factors) {
      std::int64_t n = 0;
      for (const auto& l : f.v.letters()) n += l.inverse ? -1 : 1;  // v = t^n
      base *= b_gen(n).pow(f.inverse ? -1 : 1);
    }
    const auto nf = normal_form(sys, w).nf;
    const bool in_g0 = col.tail.empty();
    const auto base_col = collect(base, GenSet{plain("b")}, GenSet{plain("c")});
    t.check(nf == base * col.tail && base_col.tail.empty() && (nf.support().count(plain("t")) == 0) == in_g0,
            [&] { return format_word(w) + " -> " + format_word(nf); });
  }
  b.tally("normal form = (product of b_i^{+-1}) t^k, in G0 iff k = 0", t);
}

void ex33(Builder& b) {
  Tally t;
  for (std::int64_t k = 1; k <= 3; ++k) {
    for (std::int64_t l = 1; l <= 3; ++l) {
      GenMap phi;
      phi.set(plain("b"), b_gen(l)).set(plain("c"), letter("c").pow(k));
      for (std::int64_t i = -4; i <= 4; ++i) {
        t.check(apply(phi, b_gen(i)) == b_gen(i * k + l),
                [&] { return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " i=" + std::to_string(i); });
      }
    }
  }
  b.tally("phi(b_i) = b_{ik+l}", t);
  std::vector<Word> gens;
  for (std::int64_t i = -3; i <= 3; ++i) gens.push_back(b_gen(2 * i + 1));
  const auto g = SubgroupGraph::of(gens);
  const auto yn = [](bool x) { return std::string(x ? "yes" : "no"); };
  b.part("truncated A_{2,1} contains b3: yes, b2: no",
         "truncated A_{2,1} contains b3: " + yn(g.contains(b_gen(3))) + ", b2: " + yn(g.contains(b_gen(2))),
         g.contains(b_gen(3)) && !g.contains(b_gen(2)));
}

Word expand_b(const Word& w) {
  GenMap h;
  h.fix_others();
  h.set_family("b", [](std::int32_t i) { return b_gen(i); });
  return apply(h, w);
}

void ex34(Builder& b, Rng& rng) {
  const auto sys = *catalog("PAPER_EX34").system;
  Tally rules;
  for (std::int64_t n = 0; n <= 6; ++n) {
    auto run = [&](const std::string& in, const Word& want) {
      const auto got = normal_form(sys, word_of(in)).nf;
      rules.check(got == want, [&] { return in + " -> " + format_word(got); });
    };
    run("t^-1 b" + std::to_string(n) + " t", bi(2 * n + 1));
    run("s^-1 b" + std::to_string(n) + " s", bi(2 * n));
    run("t b" + std::to_string(2 * n + 1) + " t^-1", bi(n));
    run("s b" + std::to_string(2 * n) + " s^-1", bi(n));
  }
  b.tally("t^-1 b_n t -> b_{2n+1}, s^-1 b_n s -> b_{2n}, t b_{2n+1} t^-1 -> b_n, s b_{2n} s^-1 -> b_n", rules);

  GenMap phi, psi;
  phi.set(plain("b"), word_of("b^c")).set(plain("c"), word_of("c^2"));
  psi.set(plain("b"), letter("b")).set(plain("c"), word_of("c^2"));
  Tally nonneg, shadow;
  for (int s = 0; s < 100; ++s) {
    const Word w = random_word(rng, {bi(1), letter("t"), letter("s")}, 14);
    const auto res = normal_form(sys, w);
    bool ok = true;
    for (const auto& l : res.nf.letters()) ok = ok && (!is_indexed(l.gen) || l.gen.index >= 0);
    nonneg.check(ok, [&] { return format_word(w) + " -> " + format_word(res.nf); });
    for (const auto& st : res.trace.steps) {
      const GenMap& h = st.letter == plain("t") ? phi : psi;
      const bool inverse_rule = st.rule.find("^-1") != std::string::npos;
      const bool sound = inverse_rule ? apply(h, expand_b(st.moved)) == expand_b(st.image)
                                      : apply(h, expand_b(st.image)) == expand_b(st.moved);
      shadow.check(sound, [&] { return st.rule + " on " + format_word(st.moved); });
    }
  }
  b.tally("random words in <b1,t,s>: normal forms use b_i with i >= 0 only", nonneg);
  b.tally("trace steps agree with phi, psi in <b,c>", shadow);
}

void ex35(Builder& b) {
  GenMap mu, chi;
  mu.set(plain("b"), word_of("b^c")).set(plain("c"), letter("c"));
  chi.set(plain("b"), letter("b")).set(plain("c"), word_of("c^-1"));
  Tally t;
  for (std::int64_t i = -4; i <= 4; ++i) {
    Word x = b_gen(i);
    for (std::int64_t j = 0; j <= 3; ++j) {
      t.check(x == b_gen(i + j), [&] { return "mu^" + std::to_string(j) + "(b_" + std::to_string(i) + ")"; });
      x = apply(mu, x);
    }
    t.check(apply(chi, b_gen(i)) == b_gen(-i), [&] { return "chi(b_" + std::to_string(i) + ")"; });
  }
  b.tally("mu^j(b_i) = b_{i+j}, chi(b_i) = b_{-i}", t);
  Tally g;
  for (std::int64_t j = 0; j <= 3; ++j) {
    std::vector<Word> image, direct;
    for (std::int64_t i = 0; i < 6; ++i) {
      Word x = b_gen(i);
      for (std::int64_t k = 0; k < j; ++k) x = apply(mu, x);
      image.push_back(x);
      direct.push_back(b_gen(i + j));
    }
    g.check(SubgroupGraph::of(image) == SubgroupGraph::of(direct), [&] { return "j=" + std::to_string(j); });
  }
  b.tally("mu^j(B0) = <b_i | i >= j> on 6 generators", g);
}

void t_action(Builder& b, Rng& rng, const std::string& name, Kind kind, const Word& display) {
  const auto sys = *catalog(name).system;
  const auto f = FinSuppFn::from_tuple({2, 5, 3});
  b.words("(2,5,3)^{t_1}", display, normal_form(sys, conj(encode(kind, f, 3, Mode::Abstract), word_of("t1"))).nf);
  Tally t;
  for (int s = 0; s < 50; ++s) {
    const auto g = random_fn(rng, 0, 3, 5);
    const auto r = static_cast<std::int64_t>(rng() % 3);
    const int sign = (rng() & 1) ? 1 : -1;
    const Word tr = Word::gen(indexed("t", static_cast<std::int32_t>(r)), sign);
    const auto got = normal_form(sys, conj(encode(kind, g, 3, Mode::Abstract), tr)).nf;
    const auto want = encode(kind, efun::bump(g, r, sign > 0 ? efun::Dir::Plus : efun::Dir::Minus), 3, Mode::Abstract);
    t.check(got == want, [&] { return efun::format(g) + " r=" + std::to_string(r) + " sign=" + std::to_string(sign); });
  }
  b.tally("t_r^{+-1} action = encode(bump)", t);
}

void ex38(Builder& b, Rng& rng) {
  Tally t;
  for (int s = 0; s < 100; ++s) {
    const auto m = static_cast<std::int64_t>(1 + rng() % 4);
    const auto f = random_fn(rng, 0, m, 6);
    const auto up = efun::bump(f, m - 1, efun::Dir::Plus);
    const auto lhs = encode(Kind::V, f, m, Mode::Abstract);
    const auto rhs = encode(Kind::Z, up, m, Mode::Abstract) * encode(Kind::Z, f, m, Mode::Abstract).inverse();
    t.check(lhs == rhs, [&] { return efun::format(f) + " m=" + std::to_string(m); });
  }
  b.tally("v_f = z_{f+} z_f^-1", t);

  const auto z = [](Tuple v) { return encode(Kind::Z, FinSuppFn::from_tuple(v), 3, Mode::Abstract); };
  b.words("v_(2,5,0)", z({2, 5, 1}) * z({2, 5, 0}).inverse(),
          encode(Kind::V, FinSuppFn::from_tuple({2, 5, 0}), 3, Mode::Abstract));
  std::vector<Word> gens;
  for (std::int64_t x = 0; x <= 2; ++x) {
    for (std::int64_t y = 0; y <= 5; ++y) {
      gens.push_back(z({x, y}));
      gens.push_back(encode(Kind::V, FinSuppFn::from_tuple({x, y, 0}), 3, Mode::Abstract));
    }
  }
  const auto g = SubgroupGraph::of(gens);
  const bool in = g.contains(z({2, 5, 1}));
  b.part("z_(2,5,1) in <Z_E2, V_E3> (f(0) in [0,2], f(1) in [0,5]): yes",
         std::string("z_(2,5,1) in <Z_E2, V_E3> (f(0) in [0,2], f(1) in [0,5]): ") + (in ? "yes" : "no"), in);
}

void l41(Builder& b, Rng& rng) {
  Tally t;
  const auto sys = *catalog("DELTA_D_RULES").system;
  for (int s = 0; s < 200; ++s) {
    const auto f = random_fn(rng, -3, 4, 5);
    const auto j = static_cast<std::int64_t>(rng() % 7) - 3;
    t.check(lemma41_check(f, j), [&] { return efun::format(f) + " j=" + std::to_string(j); });
    if (s < 40) {
      const Word dj = Word::gen(indexed("d", static_cast<std::int32_t>(j)));
      const auto nf = normal_form(sys, conj(encode(Kind::A, f, 1, Mode::Abstract), dj)).nf;
      t.check(nf == encode(Kind::A, efun::bump(f, j, efun::Dir::Plus), 1, Mode::Abstract),
              [&] { return "rewriting " + efun::format(f) + " j=" + std::to_string(j); });
    }
  }
  b.tally("a_f^{d_j} = a_{f_j^+}, a_f^{d_j^-1} = a_{f_j^-}", t);
}

void e42(Builder& b) {
  const auto f = FinSuppFn::from_tuple({2, 5, 3});
  const auto af = encode(Kind::A, f, 3, Mode::Abstract);
  b.words("a_f", word_of("b2^-3 b1^-5 b0^-2 a b0^2 b1^5 b2^3"), af);
  const auto chain = word_of("b2^-3 b1^-5 (b1^-1 b0^-2 b1) (b1^-1 a b1) (b1^-1 b0^2 b1) b1^5 b2^3");
  const auto display = word_of("b2^-3 b1^-6 b0^-2 a b0^2 b1^6 b2^3");
  b.words("cancellation chain", display, chain);
  b.words("a_f^{d_1}", display, d_conj(af, 1, 1));
}

void l43(Builder& b) {
  Word w = encode(Kind::A, FinSuppFn::from_tuple({0, 1}), 2, Mode::Abstract);
  Tally t;
  for (std::int64_t n = 0; n <= 5; ++n) {
    const auto want = encode(Kind::A, FinSuppFn::from_tuple({n, n + 1}), 2, Mode::Abstract);
    t.check(w == want, [&] { return "n=" + std::to_string(n) + ": " + format_word(w); });
    w = d_conj(d_conj(w, 0, 1), 1, 1);
  }
  b.tally("a_(0,1)^{(d0 d1)^n} = a_(n,n+1), n = 0..5", t);
  b.words("a_(0)", letter("a"), encode(Kind::A, FinSuppFn{}, 1, Mode::Abstract));
}

// --- closure under the operations --------------------------------------------

std::vector<FinSuppFn> single_point_fns(std::int64_t lo, std::int64_t hi) {
  std::vector<FinSuppFn> out;
  for (auto i = lo; i < hi; ++i) {
    for (std::int64_t v : {1, 2}) out.push_back(efun::normalize({{i, v}}));
  }
  return out;
}

std::vector<Word> a_words(const std::vector<FinSuppFn>& fs, Mode mode = Mode::Expanded) {
  std::vector<Word> out;
  for (const auto& f : fs) out.push_back(encode(Kind::A, f, 1, mode));
  return out;
}

std::vector<Word> mapped(const GenMap& h, const std::vector<Word>& ws) {
  std::vector<Word> out;
  for (const auto& w : ws) out.push_back(apply(h, w));
  return out;
}

template <typename F>
std::vector<FinSuppFn> transformed(const std::vector<FinSuppFn>& fs, F fn) {
  std::vector<FinSuppFn> out;
  for (const auto& f : fs) out.push_back(fn(f));
  return out;
}

FinSuppFn reindex(const FinSuppFn& f, const std::function<std::int64_t(std::int64_t)>& at) {
  std::map<std::int64_t, std::int64_t> m;
  for (const auto& [i, v] : f.entries()) m[at(i)] = v;
  return efun::normalize(m);
}

void t44_rho(Builder& b) {
  GenMap phi;
  phi.set(plain("a"), letter("a")).set(plain("b"), letter("b")).set(plain("c"), word_of("c^-1"));
  Tally t;
  for (std::int64_t i = -4; i < 8; ++i) {
    t.check(apply(phi, b_gen(i)) == b_gen(-i), [&] { return "i=" + std::to_string(i); });
  }
  b.tally("phi(b_i) = b_{-i}", t);
  const auto B = single_point_fns(-2, 3);
  const auto rB = transformed(B, [](const FinSuppFn& f) { return reindex(f, [](std::int64_t i) { return -i; }); });
  const bool same = SubgroupGraph::of(mapped(phi, a_words(B))) == SubgroupGraph::of(a_words(rB));
  b.part("phi(A_B) = A_rho(B) for single-point B: yes", std::string("phi(A_B) = A_rho(B) for single-point B: ") + (same ? "yes" : "no"), same);
}

void t44_sigma(Builder& b, Rng& rng) {
  GenMap phi;
  phi.set(plain("a"), letter("a")).set(plain("b"), word_of("b^c")).set(plain("c"), letter("c"));
  Tally t;
  std::vector<FinSuppFn> B;
  for (int s = 0; s < 30; ++s) {
    const auto f = random_fn(rng, -2, 4, 4);
    if (s < 6) B.push_back(f);
    t.check(apply(phi, encode(Kind::A, f, 1)) == encode(Kind::A, reindex(f, [](std::int64_t i) { return i + 1; }), 1),
            [&] { return efun::format(f); });
  }
  b.tally("phi(a_f) = a_sigma(f)", t);
  const auto sB = transformed(B, [](const FinSuppFn& f) { return reindex(f, [](std::int64_t i) { return i + 1; }); });
  const bool same = SubgroupGraph::of(mapped(phi, a_words(B))) == SubgroupGraph::of(a_words(sB));
  b.part("phi(A_B) = A_sigma(B) on 6 random f: yes", std::string("phi(A_B) = A_sigma(B) on 6 random f: ") + (same ? "yes" : "no"), same);
}

/// Products of X-letters (standing for a_f, f in B) and Y-words; every collected
/// factor must evaluate to a_g with g in `target`.
void collect_closure(Builder& b, Rng& rng, const std::string& label, const std::vector<FinSuppFn>& B,
                     const std::vector<Word>& Y, const SetExpr& target) {
  std::vector<Word> alphabet = Y;
  GenSet X, Yset;
  for (std::size_t i = 0; i < B.size(); ++i) {
    const Gen x = indexed("x", static_cast<std::int32_t>(i));
    X.add(x);
    alphabet.push_back(Word::gen(x));
  }
  for (const auto& y : Y) Yset.add(y[0].gen);
  const EvalBounds wide{-6, 12, 12};
  Tally t;
  for (int s = 0; s < 60; ++s) {
    const Word w = random_word(rng, alphabet, 10);
    const auto col = collect(w, X, Yset);
    t.check(col.product() == w, [&] { return "round trip of " + format_word(w); });
    for (const auto& fac : col.factors) {
      Word value = encode(Kind::A, B[static_cast<std::size_t>(fac.x.index)], 1, Mode::Abstract);
      for (const auto& l : fac.v.letters()) value = d_conj(value, l.gen.index, l.inverse ? -1 : 1);
      // value = a_g; read g off the conjugating word
      std::map<std::int64_t, std::int64_t> g;
      const auto n = value.size();
      for (std::size_t i = n / 2 + 1; i < n; ++i) g[value[i].gen.index] += value[i].inverse ? -1 : 1;
      const auto gf = efun::normalize(g);
      const bool is_a = value == encode(Kind::A, gf, 1, Mode::Abstract);
      t.check(is_a && member(gf, target, wide).is_in(),
              [&] { return format_word(value) + " not in A_" + efun::to_string(target); });
    }
  }
  b.tally(label, t);
}

void t44_zeta(Builder& b, Rng& rng) {
  const auto f = FinSuppFn::from_tuple({2, 5, 3});
  Tally t;
  for (std::int64_t k = -3; k <= 3; ++k) {
    Word w = encode(Kind::A, f, 1, Mode::Abstract);
    for (std::int64_t s = 0; s < (k < 0 ? -k : k); ++s) w = d_conj(w, 0, k < 0 ? -1 : 1);
    t.check(w == encode(Kind::A, f.with(0, f(0) + k), 1, Mode::Abstract), [&] { return "k=" + std::to_string(k); });
  }
  b.tally("a_f^{d^k} = a_f' with f'(0) = f(0)+k", t);
  const auto S = SetExpr::succ();
  collect_closure(b, rng, "collected factors of <A_S, d> lie in A_zeta(S)",
                  {FinSuppFn::from_tuple({0, 1}), FinSuppFn::from_tuple({3, 4}), FinSuppFn::from_tuple({-2, -1})},
                  {Word::gen(indexed("d", 0))}, SetExpr::zeta(S));
}

void t44_pi(Builder& b, Rng& rng) {
  const auto S = SetExpr::succ();
  collect_closure(b, rng, "collected factors of <A_S, d_1, d_2, d_3> lie in A_pi(S)",
                  {FinSuppFn::from_tuple({0, 1}), FinSuppFn::from_tuple({3, 4}), FinSuppFn::from_tuple({-2, -1})},
                  {Word::gen(indexed("d", 1)), Word::gen(indexed("d", 2)), Word::gen(indexed("d", 3))},
                  SetExpr::pi(S));
}

void t44_theta(Builder& b, Rng& rng) {
  GenMap gamma;
  gamma.set(plain("a"), letter("a")).set(plain("b"), letter("b")).set(plain("c"), word_of("c^2"));
  Tally t;
  for (int s = 0; s < 30; ++s) {
    const auto f = random_fn(rng, -2, 4, 4);
    t.check(apply(gamma, encode(Kind::A, f, 1)) == encode(Kind::A, reindex(f, [](std::int64_t i) { return 2 * i; }), 1),
            [&] { return efun::format(f); });
  }
  b.tally("gamma(a_f) = a_f'' with f''(2i) = f(i), zero at odd i", t);

  const std::vector<FinSuppFn> F1 = {FinSuppFn::from_tuple({1, 2}), FinSuppFn::from_tuple({0, 3, 1}),
                                     FinSuppFn::from_tuple({2})};
  const std::vector<FinSuppFn> F2 = {FinSuppFn::from_tuple({0, 3, 1}), FinSuppFn::from_tuple({2}),
                                     FinSuppFn::from_tuple({1, 1})};
  const std::vector<FinSuppFn> F12 = {FinSuppFn::from_tuple({0, 3, 1}), FinSuppFn::from_tuple({2})};
  const auto I = intersect(SubgroupGraph::of(a_words(F1)), SubgroupGraph::of(a_words(F2)));
  const bool same = I == SubgroupGraph::of(a_words(F12));
  b.part("A_F1 cap A_F2 = A_{F1 cap F2}: yes", std::string("A_F1 cap A_F2 = A_{F1 cap F2}: ") + (same ? "yes" : "no"), same);

  // R1 = <A_B, d_i odd>: collected factors agree with some f in B at even positions
  const std::vector<FinSuppFn> B = {FinSuppFn::from_tuple({1, 2, 3}), FinSuppFn::from_tuple({4, 0, -1})};
  std::vector<Word> alphabet = {Word::gen(indexed("d", -1)), Word::gen(indexed("d", 1)), Word::gen(indexed("d", 3))};
  GenSet X, Y;
  for (const auto& y : alphabet) Y.add(y[0].gen);
  for (std::size_t i = 0; i < B.size(); ++i) {
    X.add(indexed("x", static_cast<std::int32_t>(i)));
    alphabet.push_back(Word::gen(indexed("x", static_cast<std::int32_t>(i))));
  }
  Tally r1;
  for (int s = 0; s < 60; ++s) {
    const auto col = collect(random_word(rng, alphabet, 10), X, Y);
    for (const auto& fac : col.factors) {
      const auto& src = B[static_cast<std::size_t>(fac.x.index)];
      Word value = encode(Kind::A, src, 1, Mode::Abstract);
      for (const auto& l : fac.v.letters()) value = d_conj(value, l.gen.index, l.inverse ? -1 : 1);
      std::map<std::int64_t, std::int64_t> g;
      for (std::size_t i = value.size() / 2 + 1; i < value.size(); ++i) {
        g[value[i].gen.index] += value[i].inverse ? -1 : 1;
      }
      const auto gf = efun::normalize(g);
      bool ok = value == encode(Kind::A, gf, 1, Mode::Abstract);
      for (std::int64_t i = -6; i <= 6; i += 2) ok = ok && gf(i) == src(i);
      r1.check(ok, [&] { return format_word(value); });
    }
  }
  b.tally("factors of <A_B, d_odd> agree with B at even positions", r1);
}

void t44_tau(Builder& b, Rng& rng) {
  GenMap xi;
  xi.set(plain("a"), letter("a"));
  xi.set_family("b", [](std::int32_t i) {
    return Word::gen(indexed("b", i == 0 ? 1 : (i == 1 ? 0 : i)));
  });
  b.words("xi(b0 b1 a)", word_of("b1 b0 a"), apply(xi, word_of("b0 b1 a")));
  Tally t;
  for (int s = 0; s < 60; ++s) {
    auto f = random_fn(rng, -2, 4, 4);
    if (rng() & 1) f = f.with(0, 0); else f = f.with(1, 0);
    const auto swapped = reindex(f, [](std::int64_t i) { return i == 0 ? 1 : (i == 1 ? 0 : i); });
    t.check(apply(xi, encode(Kind::B, f, 1, Mode::Abstract)) == encode(Kind::B, swapped, 1, Mode::Abstract),
            [&] { return efun::format(f); });
  }
  b.tally("xi(b_f) = b_tau(f) when f(0) f(1) = 0", t);
  const auto entry = catalog("TAU_SYSTEM");
  const bool iso = sample_isomorphism(entry.rules.front(), 200, rng());
  b.part("xi on a, b0, b1, a^t, b^t, c^t passes sampled relation check: yes",
         std::string("xi on a, b0, b1, a^t, b^t, c^t passes sampled relation check: ") + (iso ? "yes" : "no"), iso);
}

void t44_omega(Builder& b) {
  const auto B = [](const Tuple& t) {
    Tuple p = t;
    p.resize(3, 0);
    return p == Tuple{0, 0, 0} || p == Tuple{2, 5, 3} || p == Tuple{7, 2, 4};
  };
  const auto l = FinSuppFn::from_tuple({0, 0, 0, 7, 2, 4, 0, 0, 0, 2, 5, 3, 7, 2, 4});
  const auto tr = omega_walk(l, 3, B);
  std::string labels;
  for (const auto& s : tr.stages) {
    labels += (labels.empty() ? "" : ", ") + s.label;
    b.r.trace.push_back(s.label + " by " + format_word(s.conjugator) + ": " + format_word(s.after));
  }
  const std::string want = "Step1, Step2, Step3+Step1, Step2x2, Step3+Step1, Step2";
  b.part("stages: " + want, "stages: " + labels, labels == want);
  b.words("result", encode(Kind::A, l, 3, Mode::Abstract), tr.result);
  const auto problem = check_walk(tr, B);
  b.part("every stage justified", problem.empty() ? "every stage justified" : problem, problem.empty());
  std::string raised = "no error";
  try {
    omega_walk(FinSuppFn::from_tuple({1, 1, 1, 2, 5, 3}), 3, B);
  } catch (const BlockNotInB&) {
    raised = "BlockNotInB";
  }
  b.part("block (1,1,1): BlockNotInB", "block (1,1,1): " + raised, raised == "BlockNotInB");
}

struct Case {
  const char* id;
  const char* claim;
  const char* location;
  const char* inputs;
  std::function<void(Builder&, Rng&)> run;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> all = {
      {"EX21a", "rho(S) = {f | f(-1) = f(0)+1, zero elsewhere}", "set expressions over S and Z",
       "window [-4,8), vmax 9", [](Builder& b, Rng&) { ex21a(b); }},
      {"EX21b", "sigma rho(S) = {(a+1,a)} = tau(S)", "set expressions over S and Z",
       "window [-4,8), vmax 9", [](Builder& b, Rng&) { ex21b(b); }},
      {"EX21c", "iota(tau(S), zeta(Z)) = {(1,0)}", "set expressions over S and Z",
       "window [-4,8), vmax 9", [](Builder& b, Rng&) { ex21c(b); }},
      {"EX21d", "zeta(sigma zeta)^2(Z) = E3", "set expressions over S and Z", "window [-4,8), vmax 9",
       [](Builder& b, Rng&) { ex21d(b); }},
      {"EX21e", "sigma^3 rho pi(Z) = {f | f(i) = 0 for i >= 3}", "set expressions over S and Z",
       "window [-4,8), vmax 9", [](Builder& b, Rng&) { ex21e(b); }},
      {"EX21f", "theta(E4) = E2", "set expressions over S and Z", "window [-4,8), vmax 9",
       [](Builder& b, Rng&) { ex21f(b); }},
      {"EX21g", "(7,8,0,0,2,3) in omega2(upsilon(S,Z)); omega2(S) empty",
       "set expressions over S and Z", "window [-4,8), vmax 9; [0,4), vmax 3",
       [](Builder& b, Rng&) { ex21g(b); }},
      {"EX21f5", "f = (0,0,7,-8,5,5,5,5), f_5^+ and f^- examples", "bump on tuples",
       "bump at 5 (+) and 7 (-)", [](Builder& b, Rng&) { ex21f5(b); }},
      {"EX32", "G0 cap <b,t> = A0 via collecting over X={b}, Y={t}", "<b,c> with stable letter t",
       "100 random words in <b,t>", ex32},
      {"EX33", "A_{k,l} is the image of A0 under b,c -> b^{c^l}, c^k", "arithmetic progressions of b-indices",
       "k,l in 1..3, i in [-4,4]", [](Builder& b, Rng&) { ex33(b); }},
      {"EX34", "the four replacement rules; normal forms keep b-indices nonnegative", "rewriting with t and s over nonnegative b_i",
       "n in 0..6; 100 random words in <b1,t,s>", ex34},
      {"EX35", "mu^j(B0) = <b_i | i >= j>, chi(b_i) = b_{-i}", "shift and flip of b-indices", "j in 0..3, i in [-4,4]",
       [](Builder& b, Rng&) { ex35(b); }},
      {"EX36", "g_f^{t_r^{+-1}} = g_{f_r^{+-}}", "t_r acting on g_f", "m = 3; f = (2,5,3), r = 1; 50 random",
       [](Builder& b, Rng& rng) {
         t_action(b, rng, "GAMMA_EX36", Kind::G, parse_word("g^(h0^2 h1^6 h2^3)"));
       }},
      {"EX37", "v_f^{t_r^{+-1}} = v_{f_r^{+-}}", "t_r acting on v_f", "m = 3; f = (2,5,3), r = 1; 50 random",
       [](Builder& b, Rng& rng) {
         t_action(b, rng, "DELTA_EX37", Kind::V, parse_word("g^(h0^2 h1^6 h2^4) b2^-1 g^-(h0^2 h1^6 h2^3)"));
       }},
      {"EX38", "v_f = z_{f+} z_f^-1; z_(2,5,1) in <Z_E2, V_E3>", "v_f against z_f",
       "100 random f, m in 1..4; m = 3 truncation", ex38},
      {"L41", "a_f^{d_j} = a_{f_j^+}, a_f^{d_j^-1} = a_{f_j^-}", "d_j acting on a_f, random grid",
       "200 random f with support in [-3,4), |values| <= 5", l41},
      {"E42", "a_(2,5,3)^{d_1} = a_(2,6,3)", "d_1 acting on a_(2,5,3)", "f = (2,5,3), j = 1",
       [](Builder& b, Rng&) { e42(b); }},
      {"L43", "a_(0,1)^{(d0 d1)^n} = a_(n,n+1)", "(d0 d1)^n acting on a_(0,1)", "n = 0..5",
       [](Builder& b, Rng&) { l43(b); }},
      {"T44_RHO", "phi: a,b,c -> a,b,c^-1 sends b_i to b_{-i}", "rho on A_B", "i in [-4,8)",
       [](Builder& b, Rng&) { t44_rho(b); }},
      {"T44_SIGMA", "phi: a,b,c -> a,b^c,c sends b_i to b_{i+1}", "sigma on A_B", "30 random f", t44_sigma},
      {"T44_ZETA", "<A_B, d> cap G = A_zeta(B)", "zeta on A_B", "B = {(0,1),(3,4),(-2,-1)}", t44_zeta},
      {"T44_PI", "<A_B, d_1, d_2, ...> cap G = A_pi(B)", "pi on A_B", "B = {(0,1),(3,4),(-2,-1)}", t44_pi},
      {"T44_THETA", "A_B1 cap A_B2 = A_{B1 cap B2}; gamma: a,b,c -> a,b,c^2", "theta on A_B",
       "explicit 3-element families; 30 random f", t44_theta},
      {"T44_TAU", "xi swaps b0, b1 and fixes a, b_i (i != 0,1)", "tau on A_B", "60 random f", t44_tau},
      {"T44_OMEGA", "a^{b_l} in W_B by Steps 1-3", "omega_m derivation of a^{b_l}",
       "m = 3, B = {(0),(2,5,3),(7,2,4)}, l = (0,0,0,7,2,4,0,0,0,2,5,3,7,2,4)", [](Builder& b, Rng&) { t44_omega(b); }},
  };
  return all;
}

CaseReport run(const Case& c, std::uint64_t seed) {
  Builder b;
  b.r.id = c.id;
  b.r.claim = c.claim;
  b.r.location = c.location;
  b.r.inputs = c.inputs;
  b.r.seed = seed;
  Rng rng(case_seed(seed, c.id));
  try {
    c.run(b, rng);
  } catch (const std::exception& e) {
    b.part("no error", std::string("error: ") + e.what(), false);
  }
  b.r.pass = b.ok;
  return b.r;
}

}  // namespace

std::vector<std::string> case_ids() {
  std::vector<std::string> out;
  for (const auto& c : cases()) out.emplace_back(c.id);
  return out;
}

CaseReport run_case(const std::string& id, std::uint64_t seed) {
  for (const auto& c : cases()) {
    if (id == c.id) return run(c, seed);
  }
  throw UnknownCase("no verification case named '" + id + "'");
}

std::vector<CaseReport> run_all(std::uint64_t seed) {
  const auto& all = cases();
  std::vector<CaseReport> out(all.size());
  const auto n = static_cast<std::int64_t>(all.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run(all[static_cast<std::size_t>(i)], seed);
  return out;
}

std::vector<CaseReport> run_all_serial(std::uint64_t seed) {
  std::vector<CaseReport> out;
  for (const auto& c : cases()) out.push_back(run(c, seed));
  return out;
}

std::string to_text(const std::vector<CaseReport>& reports) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : reports) {
    passed += r.pass ? 1 : 0;
    os << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.claim << "\n";
    os << "  where:    " << r.location << "\n";
    os << "  inputs:   " << r.inputs << "\n";
    os << "  expected: " << r.expected << "\n";
    os << "  actual:   " << r.actual << "\n";
    for (const auto& line : r.trace) os << "  | " << line << "\n";
  }
  os << passed << "/" << reports.size() << " cases passed (seed 0x" << std::hex << std::uppercase
     << (reports.empty() ? kDefaultSeed : reports.front().seed) << ")\n";
  return os.str();
}

std::string to_json(const std::vector<CaseReport>& reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["location"] = r.location;
    j["claim"] = r.claim;
    j["inputs"] = r.inputs;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["expected"] = r.expected;
    j["actual"] = r.actual;
    j["seed"] = r.seed;
    if (!r.trace.empty()) j["trace"] = r.trace;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace higman::verify
