#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include <omp.h>

#include "higman/efun.hpp"
#include "higman/subgroup.hpp"
#include "higman/syntax.hpp"
#include "higman/verify.hpp"

using namespace higman;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel, same ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  {
    const auto e = parse_expr("upsilon(omega2(upsilon(S,Z)), iota(sigma(E3), tau(S)))");
    const efun::EvalBounds b{0, 5, 4};
    std::vector<efun::FinSuppFn> s, p;
    const double ts = best_of(reps, [&] { s = efun::scan_members_serial(e, b); });
    const double tp = best_of(reps, [&] { p = efun::scan_members(e, b); });
    row("candidate scan (9^5)", ts, tp, s == p);
  }
  {
    std::vector<Word> gens = {parse_word("a^5")};
    for (int i = 0; i < 5; ++i) gens.push_back(conj(parse_word("b"), parse_word("a").pow(-i)));
    const auto g = SubgroupGraph::of(gens);
    std::mt19937_64 rng(verify::kDefaultSeed);
    std::vector<Word> words;
    const Word a = parse_word("a"), b = parse_word("b");
    for (int k = 0; k < 200000; ++k) {
      Word w;
      for (int i = 0; i < 24; ++i) w *= (rng() & 1 ? a : b).pow(rng() & 2 ? 1 : -1);
      words.push_back(w);
    }
    std::vector<bool> s, p;
    const double ts = best_of(reps, [&] { s = contains_batch_serial(g, words); });
    const double tp = best_of(reps, [&] { p = contains_batch(g, words); });
    row("batch contains (200k words)", ts, tp, s == p);
  }
  {
    std::string s, p;
    const double ts = best_of(reps, [&] { s = verify::to_text(verify::run_all_serial()); });
    const double tp = best_of(reps, [&] { p = verify::to_text(verify::run_all()); });
    row("verify run_all", ts, tp, s == p);
  }
  return 0;
}
