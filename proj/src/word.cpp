#include "higman/word.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "higman/error.hpp"

namespace higman {

namespace {

struct SymbolTable {
  std::shared_mutex mutex;
  std::deque<std::string> names;  // deque: references stay valid on growth
  std::vector<SymbolKind> kinds;
  std::unordered_map<std::string, std::uint32_t> ids;

  static SymbolTable& instance() {
    static SymbolTable table;
    return table;
  }
};

std::string table_key(std::string_view name, SymbolKind kind) {
  std::string key(name);
  key.push_back(kind == SymbolKind::Plain ? '\x01' : '\x02');
  return key;
}

}  // namespace

std::uint32_t intern_symbol(std::string_view name, SymbolKind kind) {
  auto& t = SymbolTable::instance();
  const auto key = table_key(name, kind);
  {
    std::shared_lock lock(t.mutex);
    if (auto it = t.ids.find(key); it != t.ids.end()) return it->second;
  }
  std::unique_lock lock(t.mutex);
  if (auto it = t.ids.find(key); it != t.ids.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(t.names.size());
  t.names.emplace_back(name);
  t.kinds.push_back(kind);
  t.ids.emplace(key, id);
  return id;
}

const std::string& symbol_name(std::uint32_t sym) {
  auto& t = SymbolTable::instance();
  std::shared_lock lock(t.mutex);
  return t.names.at(sym);
}

SymbolKind symbol_kind(std::uint32_t sym) {
  auto& t = SymbolTable::instance();
  std::shared_lock lock(t.mutex);
  return t.kinds.at(sym);
}

Gen plain(std::string_view name) { return {intern_symbol(name, SymbolKind::Plain), 0}; }

Gen indexed(std::string_view family, std::int32_t i) {
  return {intern_symbol(family, SymbolKind::Family), i};
}

bool is_indexed(Gen g) { return symbol_kind(g.sym) == SymbolKind::Family; }

std::string gen_name(Gen g) {
  std::string out = symbol_name(g.sym);
  if (is_indexed(g)) {
    if (g.index < 0) out.push_back('_');
    out += std::to_string(g.index);
  }
  return out;
}

bool name_less(Gen a, Gen b) {
  if (a.sym == b.sym) return a.index < b.index;
  const auto& na = symbol_name(a.sym);
  const auto& nb = symbol_name(b.sym);
  if (na != nb) return na < nb;
  // same name, plain before family
  return symbol_kind(a.sym) < symbol_kind(b.sym);
}

bool name_less(const Letter& a, const Letter& b) {
  if (a.gen != b.gen) return name_less(a.gen, b.gen);
  return !a.inverse && b.inverse;
}

// ---------------------------------------------------------------------------

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) push_reduced(letters_, l);
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::gen(Gen g, std::int64_t power) {
  Word w;
  const Letter l{g, power < 0};
  const auto n = power < 0 ? -power : power;
  w.letters_.assign(static_cast<std::size_t>(n), l);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inv());
  return w;
}

Word Word::pow(std::int64_t n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word out;
  for (std::int64_t i = 0, e = n < 0 ? -n : n; i < e; ++i) out *= base;
  return out;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(std::span<const Letter>(letters_.data() + pos, len));
}

std::set<Gen> Word::support() const {
  std::set<Gen> out;
  for (const auto& l : letters_) out.insert(l.gen);
  return out;
}

Word& Word::operator*=(const Word& v) {
  letters_.reserve(letters_.size() + v.letters_.size());
  for (const auto& l : v.letters_) push_reduced(letters_, l);
  return *this;
}

Word operator*(const Word& u, const Word& v) {
  Word w = u;
  w *= v;
  return w;
}

Word reduce(std::span<const Letter> letters) { return Word(letters); }
Word mul(const Word& u, const Word& v) { return u * v; }
Word inv(const Word& u) { return u.inverse(); }
Word conj(const Word& w, const Word& u) { return u.inverse() * w * u; }
Word commutator(const Word& u, const Word& v) { return u.inverse() * v.inverse() * u * v; }

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return name_less(u[i], v[i]);
  }
  return false;
}

// ---------------------------------------------------------------------------

Alphabet& Alphabet::add_plain(std::string_view name) {
  const auto fam = intern_symbol(name, SymbolKind::Family);
  if (std::find(families_.begin(), families_.end(), fam) != families_.end()) {
    throw NameCollision("plain generator '" + std::string(name) + "' clashes with a family");
  }
  const auto sym = intern_symbol(name, SymbolKind::Plain);
  if (std::find(plain_.begin(), plain_.end(), sym) == plain_.end()) plain_.push_back(sym);
  return *this;
}

Alphabet& Alphabet::add_family(std::string_view name) {
  const auto pl = intern_symbol(name, SymbolKind::Plain);
  if (std::find(plain_.begin(), plain_.end(), pl) != plain_.end()) {
    throw NameCollision("family '" + std::string(name) + "' clashes with a plain generator");
  }
  const auto sym = intern_symbol(name, SymbolKind::Family);
  if (std::find(families_.begin(), families_.end(), sym) == families_.end()) families_.push_back(sym);
  return *this;
}

bool Alphabet::contains(Gen g) const {
  const auto& pool = symbol_kind(g.sym) == SymbolKind::Plain ? plain_ : families_;
  return std::find(pool.begin(), pool.end(), g.sym) != pool.end();
}

void Alphabet::require(const Word& w) const {
  for (const auto& l : w.letters()) {
    if (!contains(l.gen)) throw UnknownGenerator("generator '" + gen_name(l.gen) + "' is not declared");
  }
}

Word reduce(std::span<const Letter> letters, const Alphabet& alphabet) {
  for (const auto& l : letters) {
    if (!alphabet.contains(l.gen)) {
      throw UnknownGenerator("generator '" + gen_name(l.gen) + "' is not declared");
    }
  }
  return Word(letters);
}

// ---------------------------------------------------------------------------

GenSet& GenSet::add(Gen g) {
  gens_.insert(g);
  return *this;
}

GenSet& GenSet::add_family(std::string_view family) {
  families_.insert(intern_symbol(family, SymbolKind::Family));
  return *this;
}

bool GenSet::contains(Gen g) const { return gens_.count(g) > 0 || families_.count(g.sym) > 0; }

bool GenSet::disjoint(const GenSet& other) const {
  for (auto f : families_) {
    if (other.families_.count(f)) return false;
  }
  for (const auto& g : gens_) {
    if (other.contains(g)) return false;
  }
  for (const auto& g : other.gens_) {
    if (contains(g)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

GenMap GenMap::identity_on(const Alphabet& alphabet) {
  GenMap m;
  for (auto sym : alphabet.plain_symbols()) {
    const Gen g{sym, 0};
    m.set(g, Word::gen(g));
  }
  for (auto sym : alphabet.family_symbols()) {
    m.families_[sym] = [sym](std::int32_t i) { return Word::gen(Gen{sym, i}); };
  }
  return m;
}

GenMap& GenMap::set(Gen g, Word image) {
  images_[g] = std::move(image);
  return *this;
}

GenMap& GenMap::set_family(std::string_view family, FamilyImage image) {
  families_[intern_symbol(family, SymbolKind::Family)] = std::move(image);
  return *this;
}

GenMap& GenMap::fix_others(bool on) {
  fix_others_ = on;
  return *this;
}

bool GenMap::has_image(Gen g) const {
  return fix_others_ || images_.count(g) > 0 || families_.count(g.sym) > 0;
}

Word GenMap::image(Gen g) const {
  if (auto it = images_.find(g); it != images_.end()) return it->second;
  if (auto it = families_.find(g.sym); it != families_.end()) return it->second(g.index);
  if (fix_others_) return Word::gen(g);
  throw UnknownGenerator("no image for generator '" + gen_name(g) + "'");
}

Word apply(const GenMap& hom, const Word& w) {
  Word out;
  std::map<Gen, Word> cache;
  for (const auto& l : w.letters()) {
    auto it = cache.find(l.gen);
    if (it == cache.end()) it = cache.emplace(l.gen, hom.image(l.gen)).first;
    out *= l.inverse ? it->second.inverse() : it->second;
  }
  return out;
}

}  // namespace higman
