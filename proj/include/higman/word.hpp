#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace higman {

// Generators are interned symbols: a plain name (a, b, t, ...) or a member
// b_i of an indexed family. Plain "b" and family "b" are different symbols.

enum class SymbolKind : std::uint8_t { Plain, Family };

std::uint32_t intern_symbol(std::string_view name, SymbolKind kind);
const std::string& symbol_name(std::uint32_t sym);
SymbolKind symbol_kind(std::uint32_t sym);

struct Gen {
  std::uint32_t sym = 0;
  std::int32_t index = 0;  // always 0 for plain symbols

  friend bool operator==(const Gen&, const Gen&) = default;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

Gen plain(std::string_view name);
Gen indexed(std::string_view family, std::int32_t i);
bool is_indexed(Gen g);
std::string gen_name(Gen g);

/// Order by printed name, then index. Stable across runs, unlike the raw
/// interning order.
bool name_less(Gen a, Gen b);

struct Letter {
  Gen gen;
  bool inverse = false;

  Letter inv() const { return {gen, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

bool name_less(const Letter& a, const Letter& b);

/// Freely reduced word in a free group. Construction always reduces, so two
/// words are equal as group elements iff they compare equal.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  static Word gen(Gen g, std::int64_t power = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(std::int64_t n) const;
  Word slice(std::size_t pos, std::size_t len) const;

  /// Every generator occurring in the word.
  std::set<Gen> support() const;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> letters);
Word mul(const Word& u, const Word& v);
Word inv(const Word& u);
/// u^-1 w u, written w^u.
Word conj(const Word& w, const Word& u);
/// u^-1 v^-1 u v.
Word commutator(const Word& u, const Word& v);

/// Shortlex comparison using name_less on letters (inverse after positive).
bool shortlex_less(const Word& u, const Word& v);

/// Declared generators: plain symbols plus whole indexed families.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet& add_plain(std::string_view name);
  Alphabet& add_family(std::string_view name);

  bool contains(Gen g) const;
  void require(const Word& w) const;  // throws UnknownGenerator

  const std::vector<std::uint32_t>& plain_symbols() const { return plain_; }
  const std::vector<std::uint32_t>& family_symbols() const { return families_; }

 private:
  std::vector<std::uint32_t> plain_;
  std::vector<std::uint32_t> families_;
};

/// Letters from `letters`, reduced; every generator must lie in `alphabet`.
Word reduce(std::span<const Letter> letters, const Alphabet& alphabet);

/// A set of generators that may contain whole families, used to describe
/// the X and Y of the conjugate collecting process.
class GenSet {
 public:
  GenSet() = default;
  GenSet(std::initializer_list<Gen> gens) : gens_(gens) {}

  GenSet& add(Gen g);
  GenSet& add_family(std::string_view family);
  bool contains(Gen g) const;
  bool disjoint(const GenSet& other) const;

  const std::set<Gen>& gens() const { return gens_; }
  const std::set<std::uint32_t>& families() const { return families_; }

 private:
  std::set<Gen> gens_;
  std::set<std::uint32_t> families_;
};

/// Endomorphism of a free group given by images of generators. Images of
/// indexed families are given as functions of the index.
class GenMap {
 public:
  using FamilyImage = std::function<Word(std::int32_t)>;

  GenMap() = default;

  static GenMap identity_on(const Alphabet& alphabet);

  GenMap& set(Gen g, Word image);
  GenMap& set_family(std::string_view family, FamilyImage image);
  /// Generators without an explicit image map to themselves.
  GenMap& fix_others(bool on = true);

  bool has_image(Gen g) const;
  Word image(Gen g) const;  // throws UnknownGenerator

 private:
  std::map<Gen, Word> images_;
  std::map<std::uint32_t, FamilyImage> families_;
  bool fix_others_ = false;
};

Word apply(const GenMap& hom, const Word& w);

}  // namespace higman
