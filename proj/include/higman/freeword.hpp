#pragma once

#include <vector>

#include "higman/efun.hpp"
#include "higman/word.hpp"

namespace higman {

// Indexed generators b_i, h_i either expanded over the base letters
// (b_i = c^-i b c^i, h_i = k^-i h k^i) or kept as free family members.
enum class Mode { Expanded, Abstract };

enum class Kind { B, A, H, G, Z, V };

Word b_gen(std::int64_t i, Mode mode = Mode::Expanded);
Word h_gen(std::int64_t i, Mode mode = Mode::Expanded);

/// b_f, a_f, h_f, g_f, z_f or v_f. For Z and V the support of f must lie in
/// [0, m); V bumps f at index m-1.
Word encode(Kind kind, const efun::FinSuppFn& f, std::int64_t m, Mode mode = Mode::Expanded);

struct Factor {
  Gen x;
  bool inverse = false;
  Word v;  // the factor is (x^{+-1})^v = v^-1 x^{+-1} v

  Word value() const;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Collected {
  std::vector<Factor> factors;
  Word tail;

  Word product() const;
};

/// Rewrites w in <X, Y> as a product of <Y>-conjugates of X-letters followed
/// by a word of <Y>.
Collected collect(const Word& w, const GenSet& X, const GenSet& Y);

}  // namespace higman
