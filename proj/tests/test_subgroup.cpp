#include <doctest.h>

#include <random>
#include <set>

#include "higman/freeword.hpp"
#include "higman/subgroup.hpp"
#include "higman/syntax.hpp"

using namespace higman;

namespace {

Word W(std::string_view s) { return parse_word(s); }

std::vector<Word> all_words(const std::vector<Word>& letters, std::size_t max_len) {
  std::vector<Word> out = {Word{}};
  std::set<Word> seen = {Word{}};
  std::vector<Word> frontier = {Word{}};
  for (std::size_t len = 0; len < max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (const auto& x : letters) {
        for (const auto& y : {x, x.inverse()}) {
          auto v = w * y;
          if (seen.insert(v).second) {
            out.push_back(v);
            next.push_back(v);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::int64_t exp_sum(const Word& w, Gen g) {
  std::int64_t s = 0;
  for (const auto& l : w.letters()) {
    if (l.gen == g) s += l.inverse ? -1 : 1;
  }
  return s;
}

// Schreier generators of the kernel of F(a,b) -> Z/n, a -> 1, b -> 0.
std::vector<Word> kernel_gens(int n) {
  std::vector<Word> g = {W("a").pow(n)};
  for (int i = 0; i < n; ++i) g.push_back(conj(W("b"), W("a").pow(-i)));
  return g;
}

std::vector<Word> random_gens(std::mt19937_64& rng) {
  const std::vector<Word> ab = {W("a"), W("b"), W("c")};
  std::vector<Word> g;
  const auto k = 1 + rng() % 3;
  while (g.size() < k) {
    Word w;
    const auto len = 1 + rng() % 4;
    for (std::size_t i = 0; i < len; ++i) w *= (rng() & 1) ? ab[rng() % 3] : ab[rng() % 3].inverse();
    if (!w.empty()) g.push_back(w);
  }
  return g;
}

}  // namespace

TEST_CASE("basic membership") {
  const auto ga = SubgroupGraph::of({W("a")});
  CHECK(ga.num_vertices() == 1);
  CHECK(ga.contains(W("a^2")));
  CHECK_FALSE(ga.contains(W("b")));
  std::mt19937_64 rng(3);
  for (int s = 0; s < 20; ++s) {
    const auto w = random_gens(rng).front();
    const auto g = SubgroupGraph::of({w});
    for (int n = -3; n <= 3; ++n) CHECK(g.contains(w.pow(n)));
  }
}

TEST_CASE("basis and rank") {
  const auto g = SubgroupGraph::of({W("a^2"), W("a^3")});
  CHECK(g.rank() == 1);
  CHECK(g.basis() == std::vector<Word>{W("a")});
  CHECK(SubgroupGraph::of({W("a"), W("b")}).rank() == 2);
  for (int n = 0; n <= 5; ++n) {
    std::vector<Word> bs;
    for (int i = 0; i <= n; ++i) bs.push_back(b_gen(i));
    const auto gb = SubgroupGraph::of(bs);
    CHECK(gb.rank() == n + 1);
    CHECK(SubgroupGraph::of(gb.basis()) == gb);
  }
  std::mt19937_64 rng(5);
  for (int s = 0; s < 40; ++s) {
    const auto g2 = SubgroupGraph::of(random_gens(rng));
    CHECK(SubgroupGraph::of(g2.basis()) == g2);
    CHECK(static_cast<int>(g2.basis().size()) == g2.rank());
  }
}

TEST_CASE("fold order independence") {
  std::mt19937_64 rng(0xB16A);
  for (int s = 0; s < 20; ++s) {
    const auto gens = random_gens(rng);
    const auto ref = SubgroupGraph::of(gens);
    for (std::uint64_t k = 0; k < 20; ++k) CHECK(SubgroupGraph::of(gens, rng()) == ref);
  }
}

TEST_CASE("membership against products of generators") {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 20; ++s) {
    const auto gens = random_gens(rng);
    const auto g = SubgroupGraph::of(gens);
    for (const auto& p : all_words(gens, 4)) CHECK(g.contains(p));
  }
}

TEST_CASE("membership in finite-index kernels") {
  const auto words = all_words({W("a"), W("b")}, 6);
  for (int n = 1; n <= 4; ++n) {
    const auto g = SubgroupGraph::of(kernel_gens(n));
    CHECK(g.num_vertices() == n);
    for (const auto& w : words) {
      CHECK(g.contains(w) == (exp_sum(w, plain("a")) % n == 0));
      const auto cs = g.coset_representative(w);
      CHECK(g.contains(cs.u));
      CHECK(cs.u * cs.rep == w);
      CHECK((exp_sum(cs.rep, plain("a")) - exp_sum(w, plain("a"))) % n == 0);
    }
  }
}

TEST_CASE("intersection") {
  CHECK(intersect(SubgroupGraph::of({W("a")}), SubgroupGraph::of({W("b")})).rank() == 0);
  CHECK(intersect(SubgroupGraph::of(kernel_gens(2)), SubgroupGraph::of(kernel_gens(3))) ==
        SubgroupGraph::of(kernel_gens(6)));
  const auto sample = all_words({W("a"), W("b"), W("c")}, 4);
  std::mt19937_64 rng(23);
  for (int s = 0; s < 10; ++s) {
    const auto g1 = SubgroupGraph::of(random_gens(rng));
    const auto g2 = SubgroupGraph::of(random_gens(rng));
    const auto i = intersect(g1, g2);
    CHECK(intersect(g1, g1) == g1);
    for (const auto& w : sample) CHECK(i.contains(w) == (g1.contains(w) && g2.contains(w)));
  }
}

TEST_CASE("intersection of a_f families") {
  using efun::FinSuppFn;
  auto af = [](const std::vector<efun::Tuple>& fs) {
    std::vector<Word> out;
    for (const auto& t : fs) out.push_back(encode(Kind::A, FinSuppFn::from_tuple(t), 1));
    return out;
  };
  const auto F1 = af({{1, 2}, {0, 3, 1}, {2}});
  const auto F2 = af({{0, 3, 1}, {2}, {1, 1}});
  const auto i = intersect(SubgroupGraph::of(F1), SubgroupGraph::of(F2));
  CHECK(i == SubgroupGraph::of(af({{0, 3, 1}, {2}})));
  for (const auto& p : all_words(af({{0, 3, 1}, {2}}), 3)) CHECK(i.contains(p));
  CHECK_FALSE(i.contains(F1[0]));
  CHECK_FALSE(i.contains(F2[2]));
}

TEST_CASE("batch membership") {
  const auto g = SubgroupGraph::of(kernel_gens(3));
  const auto words = all_words({W("a"), W("b")}, 5);
  const auto par = contains_batch(g, words);
  CHECK(par == contains_batch_serial(g, words));
  for (std::size_t k = 0; k < words.size(); ++k) CHECK(par[k] == g.contains(words[k]));
}
