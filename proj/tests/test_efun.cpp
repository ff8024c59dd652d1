#include <doctest.h>

#include <functional>
#include <random>

#include "higman/efun.hpp"
#include "higman/error.hpp"
#include "higman/syntax.hpp"

using namespace higman;
using namespace higman::efun;

namespace {

FinSuppFn T(const Tuple& t) { return FinSuppFn::from_tuple(t); }

// Extensional model: every function with support in [-R, R] and values in
// [-U, U], one flag per function. Operations are evaluated set-theoretically.
constexpr int R = 3;
constexpr int U = 3;
constexpr int P = 2 * R + 1;
constexpr int D = 2 * U + 1;

struct Universe {
  std::size_t n = 1;
  std::vector<std::size_t> pw;

  Universe() {
    for (int p = 0; p < P; ++p) {
      pw.push_back(n);
      n *= D;
    }
  }
  int at(std::size_t k, int i) const { return static_cast<int>(k / pw[static_cast<std::size_t>(i + R)] % D) - U; }
  std::size_t with(std::size_t k, int i, int v) const {
    const auto w = pw[static_cast<std::size_t>(i + R)];
    return k - static_cast<std::size_t>(at(k, i) + U) * w + static_cast<std::size_t>(v + U) * w;
  }
  std::size_t zero() const {
    std::size_t k = 0;
    for (int i = -R; i <= R; ++i) k = with(k, i, 0);
    return k;
  }
  // index of x -> f(x) with f given by value(i); npos if it leaves the universe
  std::optional<std::size_t> make(const std::function<std::int64_t(int)>& value, int lo = -3 * R, int hi = 3 * R) const {
    std::size_t k = zero();
    for (int i = lo; i <= hi; ++i) {
      const auto v = value(i);
      if (v == 0) continue;
      if (i < -R || i > R || v < -U || v > U) return std::nullopt;
      k = with(k, i, static_cast<int>(v));
    }
    return k;
  }
  std::optional<std::size_t> index(const FinSuppFn& f) const {
    return make([&](int i) { return f(i); });
  }
};

const Universe& uni() {
  static const Universe u;
  return u;
}

using Flags = std::vector<char>;

Flags model(const SetExpr& e) {
  const auto& u = uni();
  Flags out(u.n, 0);
  auto child = [&](std::size_t i) { return model(e.child(i)); };
  switch (e.op()) {
    case Op::Zero:
      out[u.zero()] = 1;
      break;
    case Op::Succ:
      for (int a = -U; a < U; ++a) out[*u.make([&](int i) { return i == 0 ? a : (i == 1 ? a + 1 : 0); })] = 1;
      break;
    case Op::Box: {
      const auto m = e.arity_param();
      for (std::size_t k = 0; k < u.n; ++k) {
        bool ok = true;
        for (int i = -R; i <= R; ++i) ok = ok && (u.at(k, i) == 0 || (i >= 0 && i < m));
        out[k] = ok;
      }
      break;
    }
    case Op::Iota:
    case Op::Upsilon: {
      const auto a = child(0), b = child(1);
      for (std::size_t k = 0; k < u.n; ++k) out[k] = e.op() == Op::Iota ? (a[k] && b[k]) : (a[k] || b[k]);
      break;
    }
    case Op::Rho:
    case Op::Sigma:
    case Op::Tau:
    case Op::Theta: {
      const auto a = child(0);
      for (std::size_t k = 0; k < u.n; ++k) {
        if (!a[k]) continue;
        // g = k in A; mark its image f
        std::function<std::int64_t(int)> f;
        if (e.op() == Op::Rho) f = [&](int i) { return i < -R || i > R ? 0 : u.at(k, -i); };
        if (e.op() == Op::Sigma) f = [&](int i) { return i - 1 < -R || i - 1 > R ? 0 : u.at(k, i - 1); };
        if (e.op() == Op::Tau) f = [&](int i) { return i < -R || i > R ? 0 : u.at(k, i == 0 ? 1 : (i == 1 ? 0 : i)); };
        if (e.op() == Op::Theta) f = [&](int i) { return 2 * i < -R || 2 * i > R ? 0 : u.at(k, 2 * i); };
        if (auto img = u.make(f)) out[*img] = 1;
      }
      break;
    }
    case Op::Zeta:
    case Op::Pi: {
      const auto a = child(0);
      // key: f with the free coordinates cleared
      auto key = [&](std::size_t k) {
        for (int i = -R; i <= R; ++i) {
          if (e.op() == Op::Zeta ? i == 0 : i > 0) k = u.with(k, i, 0);
        }
        return k;
      };
      Flags keys(u.n, 0);
      for (std::size_t k = 0; k < u.n; ++k) {
        if (a[k]) keys[key(k)] = 1;
      }
      for (std::size_t k = 0; k < u.n; ++k) out[k] = keys[key(k)];
      break;
    }
    case Op::Omega: {
      const auto a = child(0);
      const auto m = static_cast<int>(e.arity_param());
      if (!a[u.zero()]) break;
      for (std::size_t k = 0; k < u.n; ++k) {
        bool ok = true;
        for (int blk = -R - m; blk <= R + m && ok; ++blk) {
          const int base = blk * m;
          if (base > R || base + m - 1 < -R) continue;
          const auto g = u.make([&](int i) {
            const int src = base + i;
            return (i < 0 || i >= m || src < -R || src > R) ? 0 : u.at(k, src);
          });
          ok = g && a[*g];
        }
        out[k] = ok;
      }
      break;
    }
  }
  return out;
}

SetExpr random_expr(std::mt19937_64& rng, int depth) {
  const auto pick = rng() % (depth == 0 ? 4 : 14);
  switch (pick) {
    case 0: return SetExpr::zero();
    case 1: return SetExpr::succ();
    case 2: return SetExpr::box(1);
    case 3: return SetExpr::box(2);
    case 4: return SetExpr::rho(random_expr(rng, depth - 1));
    case 5: return SetExpr::sigma(random_expr(rng, depth - 1));
    case 6: return SetExpr::tau(random_expr(rng, depth - 1));
    case 7: return SetExpr::theta(random_expr(rng, depth - 1));
    case 8: return SetExpr::zeta(random_expr(rng, depth - 1));
    case 9: return SetExpr::pi(random_expr(rng, depth - 1));
    case 10: return SetExpr::omega(1 + static_cast<std::int64_t>(rng() % 2), random_expr(rng, depth - 1));
    case 11: return SetExpr::iota(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 12: return SetExpr::upsilon(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return SetExpr::tau(SetExpr::succ());
  }
}

}  // namespace

TEST_CASE("normalize, to_tuple, format") {
  const auto f = normalize({{2, 7}, {3, -8}, {4, 5}, {5, 5}, {6, 5}, {7, 5}});
  CHECK(to_tuple(f) == Tuple{0, 0, 7, -8, 5, 5, 5, 5});
  CHECK(to_tuple(normalize({})) == Tuple{0});
  const auto g = normalize({{1, 3}, {2, 0}});
  CHECK(g.entries().size() == 1);
  CHECK(g(1) == 3);
  CHECK(to_tuple(normalize({{0, 1}, {1, 2}})) == Tuple{1, 2});
  CHECK_THROWS_AS(to_tuple(normalize({{-1, 1}})), NegativeSupport);
  CHECK(format(normalize({{-1, 1}})) == "{-1:1}");
  CHECK(format(T({1, 0})) == "(1)");
}

TEST_CASE("bump") {
  const auto f = T({0, 0, 7, -8, 5, 5, 5, 5});
  CHECK(bump(f, 5, Dir::Plus) == T({0, 0, 7, -8, 5, 6, 5, 5}));
  CHECK(bump(f, 7, Dir::Minus) == T({0, 0, 7, -8, 5, 5, 5, 4}));
  CHECK(bump(FinSuppFn{}, 0, Dir::Plus) == T({1}));
  CHECK(bump(bump(f, 3, Dir::Plus), 3, Dir::Minus) == f);
}

TEST_CASE("blocks") {
  CHECK(blocks(T({7, 8, 0, 0, 2, 3}), 2) == std::map<std::int64_t, Tuple>{{0, {7, 8}}, {2, {2, 3}}});
  CHECK(blocks(FinSuppFn{}, 3).empty());
  CHECK(blocks(T({0, 0, 0, 7, 2, 4, 0, 0, 0, 2, 5, 3, 7, 2, 4}), 3) ==
        std::map<std::int64_t, Tuple>{{1, {7, 2, 4}}, {3, {2, 5, 3}}, {4, {7, 2, 4}}});
}

TEST_CASE("member examples") {
  const EvalBounds b;
  CHECK(member(T({7, 8, 0, 0, 2, 3}), parse_expr("omega2(upsilon(S,Z))"), b).is_in());
  CHECK(member(T({0}), parse_expr("omega2(S)"), b).is_out());
  CHECK(member(T({5, 6}), SetExpr::succ(), b).is_in());
  CHECK(member(T({1, 1}), SetExpr::succ(), b).is_out());
  CHECK(member(T({1, 0}), parse_expr("iota(tau(S), zeta(Z))"), {-2, 4, 4}).is_in());
  const auto u = member(T({0, 20}), parse_expr("zeta(S)"), b);
  CHECK(u.is_unknown());
  CHECK(u.reason.find("vmax") != std::string::npos);
}

TEST_CASE("enumerate examples") {
  CHECK(enumerate_list(parse_expr("iota(tau(S), zeta(Z))"), {0, 2, 3}) == std::vector<FinSuppFn>{T({1, 0})});
  CHECK(enumerate_list(SetExpr::zero(), {}) == std::vector<FinSuppFn>{FinSuppFn{}});
  CHECK(enumerate(parse_expr("theta(E4)"), {0, 2, 2}).equals(enumerate(SetExpr::box(2), {0, 2, 2})));
  CHECK(enumerate(parse_expr("omega2(S)"), {0, 4, 3}).empty());
  CHECK_THROWS_AS(enumerate(parse_expr("zeta(S)"), {0, 2, 20}), BoundTooTight);
}

TEST_CASE("FunctionSet algebra") {
  const EvalBounds b{0, 2, 2};
  const FunctionSet all(b, {{std::nullopt, std::nullopt}});
  const auto some = FunctionSet::of(b, {T({1, 2}), T({0}), T({2, -2})});
  CHECK(all.size() == 25);
  CHECK(some.size() == 3);
  CHECK(some.subset_of(all));
  CHECK_FALSE(all.subset_of(some));
  CHECK(some.contains(T({1, 2})));
  CHECK_FALSE(some.contains(T({1, 1})));
  CHECK(all.expand().size() == 25);
  CHECK_THROWS_AS(all.expand(10), EnumerationTooLarge);
}

TEST_CASE("enumerate and member agree with the extensional model") {
  std::mt19937_64 rng(0xB16A);
  const EvalBounds b{-1, 2, 2};
  int compared = 0, skipped = 0;
  for (int s = 0; s < 120; ++s) {
    const auto e = random_expr(rng, 1 + static_cast<int>(rng() % 2));
    CAPTURE(to_string(e));
    const auto want = model(e);
    std::vector<FinSuppFn> expected;
    for (int x = -2; x <= 2; ++x) {
      for (int y = -2; y <= 2; ++y) {
        for (int z = -2; z <= 2; ++z) {
          const auto f = normalize({{-1, x}, {0, y}, {1, z}});
          if (want[*uni().index(f)]) expected.push_back(f);
        }
      }
    }
    try {
      const auto got = enumerate(e, b);
      CHECK(got.equals(FunctionSet::of(b, expected)));
      CHECK(scan_members_serial(e, b) == got.expand());
      ++compared;
    } catch (const BoundTooTight&) {
      ++skipped;
    }
  }
  MESSAGE("compared " << compared << ", skipped (Unknown) " << skipped);
  CHECK(compared >= 100);
}

TEST_CASE("parallel scan equals serial scan") {
  const auto e = parse_expr("upsilon(sigma(S), iota(tau(S), E2))");
  const EvalBounds b{-1, 3, 3};
  CHECK(scan_members(e, b) == scan_members_serial(e, b));
  CHECK(scan_members(e, b) == enumerate_list(e, b));
}

TEST_CASE("operation properties on random expressions") {
  std::mt19937_64 rng(99);
  const EvalBounds b{-2, 3, 2};
  std::vector<FinSuppFn> fns;
  for (int x = -2; x <= 2; ++x) {
    for (int y = -2; y <= 2; ++y) {
      for (int z = -1; z <= 1; ++z) fns.push_back(normalize({{-1, z}, {0, x}, {1, y}}));
    }
  }
  auto same = [](const Membership& a, const Membership& c) { return a.is_unknown() || c.is_unknown() || a == c; };
  for (int s = 0; s < 40; ++s) {
    const auto e = random_expr(rng, 2);
    CAPTURE(to_string(e));
    const bool zero_out = member(FinSuppFn{}, e, b).is_out();
    for (const auto& f : fns) {
      const auto m = member(f, e, b);
      CHECK(member(f, SetExpr::rho(SetExpr::rho(e)), b) == m);
      CHECK(same(member(f, SetExpr::tau(SetExpr::tau(e)), b), m));
      CHECK(same(member(f, SetExpr::iota(e, e), b), m));
      CHECK(same(member(f, SetExpr::upsilon(e, e), b), m));
      if (zero_out) CHECK(member(f, SetExpr::omega(2, e), b).is_out());
    }
  }
}

TEST_CASE("windowed identities") {
  const auto e = parse_expr("zeta(sigma(zeta(sigma(zeta(Z)))))");
  for (const EvalBounds b : {EvalBounds{0, 3, 2}, EvalBounds{-1, 4, 2}, EvalBounds{-2, 5, 1}, EvalBounds{}}) {
    CHECK(enumerate(e, b).equals(enumerate(SetExpr::box(3), b)));
  }
  const EvalBounds b{-1, 5, 2};
  for (const auto& f : enumerate_list(parse_expr("sigma(sigma(sigma(rho(pi(Z)))))"), b)) {
    for (std::int64_t i = 3; i < 5; ++i) CHECK(f(i) == 0);
  }
  CHECK(enumerate(parse_expr("sigma(rho(S))"), {-1, 3, 3}).equals(enumerate(parse_expr("tau(S)"), {-1, 3, 3})));
  std::mt19937_64 rng(5);
  for (int s = 0; s < 100; ++s) {
    Tuple t;
    const auto n = 1 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) t.push_back(static_cast<std::int64_t>(rng() % 9) - 4);
    const auto f = T(t);
    std::map<std::int64_t, std::int64_t> m;
    const auto tt = to_tuple(f);
    for (std::size_t i = 0; i < tt.size(); ++i) m[static_cast<std::int64_t>(i)] = tt[i];
    CHECK(normalize(m) == f);
  }
}
