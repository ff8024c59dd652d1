#include "higman/freeword.hpp"

#include "higman/error.hpp"

namespace higman {

namespace {

Word conjugated_letter(const char* base, const char* by, std::int64_t i) {
  const Word c = Word::gen(plain(by), i);
  return conj(Word::gen(plain(base)), c);
}

Word family_product(const efun::FinSuppFn& f, Word (*gen)(std::int64_t, Mode), Mode mode) {
  Word out;
  for (const auto& [i, v] : f.entries()) out *= gen(i, mode).pow(v);
  return out;
}

void require_window(const efun::FinSuppFn& f, std::int64_t m) {
  if (m < 1) throw SupportOutOfRange("m must be positive");
  if (f.is_zero()) return;
  if (*f.min_index() < 0 || *f.max_index() >= m) {
    throw SupportOutOfRange("support of " + efun::format(f) + " is not inside [0," + std::to_string(m) + ")");
  }
}

}  // namespace

Word b_gen(std::int64_t i, Mode mode) {
  if (mode == Mode::Abstract) return Word::gen(indexed("b", static_cast<std::int32_t>(i)));
  return conjugated_letter("b", "c", i);
}

Word h_gen(std::int64_t i, Mode mode) {
  if (mode == Mode::Abstract) return Word::gen(indexed("h", static_cast<std::int32_t>(i)));
  return conjugated_letter("h", "k", i);
}

Word encode(Kind kind, const efun::FinSuppFn& f, std::int64_t m, Mode mode) {
  switch (kind) {
    case Kind::B: return family_product(f, b_gen, mode);
    case Kind::A: return conj(Word::gen(plain("a")), family_product(f, b_gen, mode));
    case Kind::H: return family_product(f, h_gen, mode);
    case Kind::G: return conj(Word::gen(plain("g")), family_product(f, h_gen, mode));
    case Kind::Z:
      require_window(f, m);
      return encode(Kind::G, f, m, mode) * encode(Kind::B, f, m, mode).inverse();
    case Kind::V: {
      require_window(f, m);
      const auto up = efun::bump(f, m - 1, efun::Dir::Plus);
      return encode(Kind::G, up, m, mode) * b_gen(m - 1, mode).inverse() * encode(Kind::G, f, m, mode).inverse();
    }
  }
  return {};
}

Word Factor::value() const { return conj(Word({Letter{x, inverse}}), v); }

Word Collected::product() const {
  Word out;
  for (const auto& f : factors) out *= f.value();
  return out * tail;
}

Collected collect(const Word& w, const GenSet& X, const GenSet& Y) {
  if (!X.disjoint(Y)) throw Error("collect: X and Y must be disjoint");
  Collected out;
  Word prefix;  // z_1 ... z_i
  for (const auto& l : w.letters()) {
    if (Y.contains(l.gen)) {
      prefix *= Word({l});
    } else if (X.contains(l.gen)) {
      out.factors.push_back({l.gen, l.inverse, prefix.inverse()});
    } else {
      throw ForeignGenerator("generator '" + gen_name(l.gen) + "' is in neither X nor Y");
    }
  }
  out.tail = prefix;
  return out;
}

}  // namespace higman
