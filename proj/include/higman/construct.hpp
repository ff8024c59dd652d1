#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "higman/efun.hpp"
#include "higman/subgroup.hpp"
#include "higman/word.hpp"

namespace higman {

struct Presentation {
  std::vector<Gen> gens;  // declaration order
  std::vector<Word> relators;

  bool has(Gen g) const;
  Presentation& add_gen(Gen g);              // NameCollision if present
  Presentation& add_relator(const Word& r);  // UnknownGenerator for undeclared letters
};

Presentation free_presentation(const std::vector<Gen>& gens);

/// "gens: a b c\nrel: <word>\n..." ; parse_presentation accepts the same.
std::string to_text(const Presentation& p);
Presentation parse_presentation(std::string_view text);

struct StableLetterRule {
  Gen letter;
  std::vector<std::pair<Word, Word>> pairs;  // d -> image of d
};

/// One generator per rule and one relator t^-1 d t image^-1 per pair.
Presentation hnn(const Presentation& base, const std::vector<StableLetterRule>& rules);

/// Random products of the domain words are trivial exactly when the same
/// products of the images are, and equal exactly when the images are.
bool sample_isomorphism(const StableLetterRule& rule, int samples, std::uint64_t seed);

/// Union of both presentations plus one relator u v^-1 per pair. Right-hand
/// generators clashing with left-hand ones get an "R" suffix (repeated until
/// unique) unless `rename` is false, in which case NameCollision is thrown.
Presentation amalgam(const Presentation& left, const Presentation& right,
                     const std::vector<std::pair<Word, Word>>& pairs, bool rename = true);

/// K plus a new letter commuting with each of the given words.
Presentation rope_trick(const Presentation& K, const std::vector<Word>& L_gens, Gen letter = plain("t"));

// ---------------------------------------------------------------------------

/// w^{d_j} (sign +1) or w^{d_j^-1} (sign -1) for w over a and the family b:
/// b_i is fixed for i >= j, a and b_i (i < j) are conjugated by b_j^{sign}.
Word d_conj(const Word& w, std::int64_t j, int sign);

/// d_j maps a_f to a_{f_j^+} and d_j^-1 maps it to a_{f_j^-}.
bool lemma41_check(const efun::FinSuppFn& f, std::int64_t j);

// ---------------------------------------------------------------------------

/// Replaces y^-1 w by phi(u) y^-1 v (inverse rule) or y w by phi^-1(u) y v,
/// where w is the maximal base subword after the stable letter, u lies in
/// the associated subgroup and v is the chosen coset representative.
struct RewriteRule {
  std::string id;
  std::function<bool(Gen)> letter;
  bool inverse = true;
  std::function<SubgroupGraph::Coset(Gen, const Word&)> split;
  std::function<Word(Gen, const Word&)> map;
};

struct RewriteSystem {
  std::string name;
  std::function<bool(Gen)> is_stable;
  std::vector<RewriteRule> rules;
};

struct TraceStep {
  std::string rule;
  Word before;
  Word after;
  Gen letter{};
  Word moved;  // u
  Word image;  // the replacement of u
};

struct DerivationTrace {
  std::vector<TraceStep> steps;
};

struct NormalForm {
  Word nf;
  DerivationTrace trace;
};

/// Rightmost applicable position first; rules tried in order.
NormalForm normal_form(const RewriteSystem& sys, const Word& w, std::uint64_t budget = 1'000'000);

// Coset oracles.
SubgroupGraph::Coset split_whole(const Word& w);
/// Subgroup generated by the basis letters accepted by `in_factor`.
SubgroupGraph::Coset split_free_factor(const Word& w, const std::function<bool(Gen)>& in_factor);
SubgroupGraph::Coset split_graph(const Word& w, const SubgroupGraph& g);

/// Automorphism rules for a stable letter acting as `phi` (with inverse
/// `phi_inv`) on the whole base group.
std::vector<RewriteRule> automorphism_rules(const std::string& prefix, std::function<bool(Gen)> letter,
                                            std::function<Word(Gen, const Word&)> phi,
                                            std::function<Word(Gen, const Word&)> phi_inv);

// ---------------------------------------------------------------------------

using TupleOracle = std::function<bool(const efun::Tuple&)>;

struct WalkStage {
  std::string label;      // "Step1", "Step2", "Step2x2", "Step3+Step1", ...
  Word conjugator;        // g_f or r^k, abstract letters
  efun::FinSuppFn block;  // f for Step1 stages
  std::int64_t shift = 0; // k for Step2 stages
  Word before;
  Word after;
};

struct WalkTrace {
  std::int64_t m = 1;
  std::vector<WalkStage> stages;
  Word result;
};

/// Derives a^{b_l} from a by conjugations with g_f (f a block of l) and
/// powers of r, highest nonzero block first. Throws BlockNotInB.
WalkTrace omega_walk(const efun::FinSuppFn& l, std::int64_t m, const TupleOracle& B);

/// Recomputes every stage independently; empty string when valid, otherwise
/// a description of the first bad stage.
std::string check_walk(const WalkTrace& t, const TupleOracle& B);

// ---------------------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::optional<Presentation> presentation;
  std::optional<RewriteSystem> system;
  std::vector<StableLetterRule> rules;  // stable-letter data behind the presentation
};

std::vector<std::string> catalog_names();
CatalogEntry catalog(const std::string& name, std::int64_t m = 3);

}  // namespace higman
