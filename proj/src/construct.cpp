#include "higman/construct.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "higman/error.hpp"
#include "higman/freeword.hpp"
#include "higman/syntax.hpp"

namespace higman {

bool Presentation::has(Gen g) const { return std::find(gens.begin(), gens.end(), g) != gens.end(); }

Presentation& Presentation::add_gen(Gen g) {
  if (has(g)) throw NameCollision("generator '" + gen_name(g) + "' is already declared");
  gens.push_back(g);
  return *this;
}

Presentation& Presentation::add_relator(const Word& r) {
  for (const auto& l : r.letters()) {
    if (!has(l.gen)) throw UnknownGenerator("relator uses undeclared generator '" + gen_name(l.gen) + "'");
  }
  relators.push_back(r);
  return *this;
}

Presentation free_presentation(const std::vector<Gen>& gens) {
  Presentation p;
  for (auto g : gens) p.add_gen(g);
  return p;
}

std::string to_text(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (auto g : p.gens) os << ' ' << gen_name(g);
  os << '\n';
  for (const auto& r : p.relators) os << "rel: " << format_word(r) << '\n';
  return os.str();
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool seen_gens = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto where = " (line " + std::to_string(line_no) + ")";
    if (line.rfind("gens:", 0) == 0) {
      if (seen_gens) throw ParseError("second gens line" + where);
      seen_gens = true;
      std::istringstream is{std::string(line.substr(5))};
      std::string tok;
      while (is >> tok) {
        const Word w = parse_word(tok);
        if (w.size() != 1 || w[0].inverse) throw ParseError("'" + tok + "' is not a generator" + where);
        p.add_gen(w[0].gen);
      }
    } else if (line.rfind("rel:", 0) == 0) {
      if (!seen_gens) throw ParseError("relator before gens line" + where);
      p.add_relator(parse_word(line.substr(4)));
    } else {
      throw ParseError("expected 'gens:' or 'rel:'" + where);
    }
  }
  if (!seen_gens) throw ParseError("missing gens line");
  return p;
}

// ---------------------------------------------------------------------------

namespace {

void require_over(const Presentation& p, const Word& w, const std::string& what) {
  for (const auto& l : w.letters()) {
    if (!p.has(l.gen)) throw MalformedRule(what + " uses '" + gen_name(l.gen) + "', not a base generator");
  }
}

Gen renamed(Gen g, const std::set<Gen>& taken) {
  std::string name = symbol_name(g.sym);
  const bool fam = is_indexed(g);
  Gen out = g;
  while (taken.count(out)) {
    name += "R";
    out = fam ? indexed(name, g.index) : plain(name);
  }
  return out;
}

}  // namespace

Presentation hnn(const Presentation& base, const std::vector<StableLetterRule>& rules) {
  Presentation out = base;
  for (const auto& rule : rules) {
    if (out.has(rule.letter)) {
      throw MalformedRule("stable letter '" + gen_name(rule.letter) + "' is already a generator");
    }
    for (const auto& [d, img] : rule.pairs) {
      require_over(base, d, "associated word");
      require_over(base, img, "image word");
    }
    out.add_gen(rule.letter);
  }
  for (const auto& rule : rules) {
    const Word t = Word::gen(rule.letter);
    for (const auto& [d, img] : rule.pairs) out.relators.push_back(conj(d, t) * img.inverse());
  }
  return out;
}

bool sample_isomorphism(const StableLetterRule& rule, int samples, std::uint64_t seed) {
  const auto k = rule.pairs.size();
  if (k == 0) return true;
  std::mt19937_64 rng(seed);
  auto random_product = [&](std::vector<std::pair<std::size_t, bool>>& code) {
    code.clear();
    const auto len = 1 + rng() % 8;
    for (std::size_t i = 0; i < len; ++i) code.emplace_back(rng() % k, rng() & 1);
  };
  auto eval = [&](const std::vector<std::pair<std::size_t, bool>>& code, bool image) {
    Word w;
    for (auto [i, inv] : code) {
      const Word& x = image ? rule.pairs[i].second : rule.pairs[i].first;
      w *= inv ? x.inverse() : x;
    }
    return w;
  };
  std::vector<std::pair<std::size_t, bool>> c1, c2;
  for (int s = 0; s < samples; ++s) {
    random_product(c1);
    random_product(c2);
    if (eval(c1, false).empty() != eval(c1, true).empty()) return false;
    if ((eval(c1, false) == eval(c2, false)) != (eval(c1, true) == eval(c2, true))) return false;
  }
  return true;
}

Presentation amalgam(const Presentation& left, const Presentation& right,
                     const std::vector<std::pair<Word, Word>>& pairs, bool rename) {
  std::set<Gen> taken(left.gens.begin(), left.gens.end());
  taken.insert(right.gens.begin(), right.gens.end());
  GenMap ren;
  ren.fix_others();
  Presentation out = left;
  for (auto g : right.gens) {
    Gen h = g;
    if (left.has(g)) {
      if (!rename) throw NameCollision("generator '" + gen_name(g) + "' occurs in both factors");
      h = renamed(g, taken);
      taken.insert(h);
      ren.set(g, Word::gen(h));
    }
    out.add_gen(h);
  }
  for (const auto& r : right.relators) out.relators.push_back(apply(ren, r));
  for (const auto& [u, v] : pairs) {
    require_over(left, u, "left amalgam word");
    require_over(right, v, "right amalgam word");
    out.relators.push_back(u * apply(ren, v).inverse());
  }
  return out;
}

Presentation rope_trick(const Presentation& K, const std::vector<Word>& L_gens, Gen letter) {
  for (const auto& l : L_gens) require_over(K, l, "L generator");
  Presentation out = K;
  out.add_gen(letter);
  const Word t = Word::gen(letter);
  for (const auto& l : L_gens) out.relators.push_back(commutator(l, t));
  return out;
}

// ---------------------------------------------------------------------------

Word d_conj(const Word& w, std::int64_t j, int sign) {
  if (sign != 1 && sign != -1) throw Error("sign must be +1 or -1");
  const Gen a = plain("a");
  const auto bfam = intern_symbol("b", SymbolKind::Family);
  const Word by = Word::gen(indexed("b", static_cast<std::int32_t>(j)), sign);
  Word out;
  for (const auto& l : w.letters()) {
    Word img;
    if (l.gen == a) {
      img = conj(Word::gen(a), by);
    } else if (l.gen.sym == bfam) {
      img = Word::gen(l.gen);
      if (l.gen.index < j) img = conj(img, by);
    } else {
      throw ForeignGenerator("d_j acts on a and b_i only, not on '" + gen_name(l.gen) + "'");
    }
    out *= l.inverse ? img.inverse() : img;
  }
  return out;
}

bool lemma41_check(const efun::FinSuppFn& f, std::int64_t j) {
  const Word af = encode(Kind::A, f, 1, Mode::Abstract);
  return d_conj(af, j, 1) == encode(Kind::A, efun::bump(f, j, efun::Dir::Plus), 1, Mode::Abstract) &&
         d_conj(af, j, -1) == encode(Kind::A, efun::bump(f, j, efun::Dir::Minus), 1, Mode::Abstract);
}

// ---------------------------------------------------------------------------

SubgroupGraph::Coset split_whole(const Word& w) { return {w, Word{}}; }

SubgroupGraph::Coset split_free_factor(const Word& w, const std::function<bool(Gen)>& in_factor) {
  std::size_t n = 0;
  while (n < w.size() && in_factor(w[n].gen)) ++n;
  return {w.slice(0, n), w.slice(n, w.size() - n)};
}

SubgroupGraph::Coset split_graph(const Word& w, const SubgroupGraph& g) { return g.coset_representative(w); }

std::vector<RewriteRule> automorphism_rules(const std::string& prefix, std::function<bool(Gen)> letter,
                                            std::function<Word(Gen, const Word&)> phi,
                                            std::function<Word(Gen, const Word&)> phi_inv) {
  auto whole = [](Gen, const Word& w) { return split_whole(w); };
  return {
      {prefix + "^-1 w", letter, true, whole, std::move(phi)},
      {prefix + " w", letter, false, whole, std::move(phi_inv)},
  };
}

NormalForm normal_form(const RewriteSystem& sys, const Word& w, std::uint64_t budget) {
  NormalForm out{w, {}};
  std::uint64_t steps = 0;
  while (true) {
    const auto& cur = out.nf;
    bool applied = false;
    for (std::size_t p = cur.size(); p-- > 0 && !applied;) {
      const Letter y = cur[p];
      if (!sys.is_stable(y.gen)) continue;
      std::size_t end = p + 1;
      while (end < cur.size() && !sys.is_stable(cur[end].gen)) ++end;
      if (end == p + 1) continue;
      const Word base = cur.slice(p + 1, end - p - 1);
      for (const auto& rule : sys.rules) {
        if (rule.inverse != y.inverse || !rule.letter(y.gen)) continue;
        auto [u, v] = rule.split(y.gen, base);
        if (u.empty()) continue;
        if (++steps > budget) {
          throw NonTermination(sys.name + ": no normal form within " + std::to_string(budget) + " steps");
        }
        const Word image = rule.map(y.gen, u);
        const Word next = cur.slice(0, p) * image * Word({y}) * v * cur.slice(end, cur.size() - end);
        out.trace.steps.push_back({rule.id, cur, next, y.gen, u, image});
        out.nf = next;
        applied = true;
        break;
      }
    }
    if (!applied) return out;
  }
}

// ---------------------------------------------------------------------------

namespace {

efun::FinSuppFn shifted(const efun::FinSuppFn& f, std::int64_t by) {
  std::map<std::int64_t, std::int64_t> m;
  for (const auto& [i, v] : f.entries()) m[i + by] = v;
  return efun::normalize(m);
}

efun::FinSuppFn added(const efun::FinSuppFn& f, const efun::FinSuppFn& g) {
  std::map<std::int64_t, std::int64_t> m = f.entries();
  for (const auto& [i, v] : g.entries()) m[i] += v;
  return efun::normalize(m);
}

Word r_power(std::int64_t k) { return Word::gen(plain("r"), k); }

std::string shift_label(std::int64_t s) { return s == 1 ? "Step2" : "Step2x" + std::to_string(s); }

}  // namespace

WalkTrace omega_walk(const efun::FinSuppFn& l, std::int64_t m, const TupleOracle& B) {
  if (m < 1) throw Error("m must be positive");
  if (!B(efun::Tuple(static_cast<std::size_t>(m), 0))) {
    throw BlockNotInB("the zero block is not in B, so omega_" + std::to_string(m) + "(B) is empty");
  }
  const auto bl = efun::blocks(l, m);
  for (const auto& [i, t] : bl) {
    if (!B(t)) {
      throw BlockNotInB("block " + std::to_string(i) + " = " + efun::format(efun::FinSuppFn::from_tuple(t)) +
                        " is not in B");
    }
  }
  WalkTrace out;
  out.m = m;
  out.result = Word::gen(plain("a"));
  if (bl.empty()) return out;

  efun::FinSuppFn cur;
  Word word = out.result;
  std::optional<std::int64_t> prev;
  auto stage = [&](std::string label, Word by, efun::FinSuppFn block, std::int64_t shift, efun::FinSuppFn next) {
    Word after = encode(Kind::A, next, m, Mode::Abstract);
    out.stages.push_back({std::move(label), std::move(by), std::move(block), shift, word, after});
    word = std::move(after);
    cur = std::move(next);
  };
  for (auto it = bl.rbegin(); it != bl.rend(); ++it) {
    const auto f = efun::FinSuppFn::from_tuple(it->second);
    if (prev) {
      const auto s = *prev - it->first;
      stage(shift_label(s), r_power(s), {}, s, shifted(cur, s * m));
    }
    stage(prev ? "Step3+Step1" : "Step1", encode(Kind::G, f, m, Mode::Abstract), f, 0, added(f, cur));
    prev = it->first;
  }
  if (*prev != 0) stage(shift_label(*prev), r_power(*prev), {}, *prev, shifted(cur, *prev * m));
  out.result = word;
  return out;
}

std::string check_walk(const WalkTrace& t, const TupleOracle& B) {
  const auto m = t.m;
  const Gen a = plain("a");
  const auto bfam = intern_symbol("b", SymbolKind::Family);
  Word expect_before = Word::gen(a);
  for (std::size_t k = 0; k < t.stages.size(); ++k) {
    const auto& s = t.stages[k];
    const auto where = "stage " + std::to_string(k + 1) + " (" + s.label + ")";
    if (s.before != expect_before) return where + ": does not continue the previous stage";
    // before = X^-1 a X
    const auto n = s.before.size();
    if (n % 2 == 0 || s.before[n / 2] != Letter{a, false}) return where + ": not a conjugate of a";
    const Word X = s.before.slice(n / 2 + 1, n / 2);
    Word expected;
    if (s.label.rfind("Step2", 0) == 0) {
      if (s.conjugator != Word::gen(plain("r"), s.shift)) return where + ": conjugator is not r^" + std::to_string(s.shift);
      GenMap rho;
      rho.set(a, Word::gen(a));
      rho.set_family("b", [m, &s](std::int32_t i) {
        return Word::gen(indexed("b", static_cast<std::int32_t>(i + s.shift * m)));
      });
      expected = apply(rho, s.before);
    } else {
      const auto f = to_tuple(s.block);
      if (f.size() > static_cast<std::size_t>(m)) return where + ": block longer than m";
      efun::Tuple padded = f;
      padded.resize(static_cast<std::size_t>(m), 0);
      if (!B(padded)) return where + ": block not in B";
      Word hf, bf;
      for (std::size_t i = 0; i < padded.size(); ++i) {
        hf *= Word::gen(indexed("h", static_cast<std::int32_t>(i)), padded[i]);
        bf *= Word::gen(indexed("b", static_cast<std::int32_t>(i)), padded[i]);
      }
      if (s.conjugator != hf.inverse() * Word::gen(plain("g")) * hf) return where + ": conjugator is not g_f";
      for (const auto& l : X.letters()) {
        const bool outside = l.gen.sym == bfam && (l.gen.index < 0 || l.gen.index >= m);
        if (!outside) return where + ": g_f does not commute with " + gen_name(l.gen);
      }
      if (s.label == "Step1" && !X.empty()) return where + ": Step1 must start from a";
      expected = conj(Word::gen(a), bf * X);
    }
    if (s.after != expected) return where + ": result differs from the recomputed conjugate";
    expect_before = s.after;
  }
  if (t.result != expect_before) return "result is not the last stage";
  return {};
}

// ---------------------------------------------------------------------------

namespace {

Word W(std::string_view s) { return parse_word(s); }
Word G(std::string_view name) { return Word::gen(plain(name)); }
Word fam(std::string_view name, std::int64_t i) { return Word::gen(indexed(name, static_cast<std::int32_t>(i))); }

std::function<bool(Gen)> is_plain(std::string_view name) {
  const Gen g = plain(name);
  return [g](Gen x) { return x == g; };
}

std::function<bool(Gen)> in_family(std::string_view name) {
  const auto sym = intern_symbol(name, SymbolKind::Family);
  return [sym](Gen x) { return x.sym == sym; };
}

std::function<Word(Gen, const Word&)> via(GenMap hom) {
  return [hom = std::move(hom)](Gen, const Word& w) { return apply(hom, w); };
}

Presentation base_G0() { return free_presentation({plain("b"), plain("c")}); }
Presentation base_G() { return free_presentation({plain("a"), plain("b"), plain("c")}); }

CatalogEntry gamma_ex32() {
  StableLetterRule t{plain("t"), {{G("b"), W("b^c")}, {G("c"), G("c")}}};
  GenMap phi, phi_inv;
  phi.set(plain("b"), W("b^c")).set(plain("c"), G("c"));
  phi_inv.set(plain("b"), W("c b c^-1")).set(plain("c"), G("c"));
  RewriteSystem sys{"GAMMA_EX32", is_plain("t"), automorphism_rules("t", is_plain("t"), via(phi), via(phi_inv))};
  return {"GAMMA_EX32", "G0 *_phi t with phi: b,c -> b^c,c", hnn(base_G0(), {t}), sys, {t}};
}

GenMap tr_map(std::int64_t r, int sign, bool fix_b) {
  const Word by = fam("h", r).pow(sign);
  GenMap m;
  m.set(plain("g"), conj(G("g"), by));
  m.set_family("h", [r, by](std::int32_t i) {
    const Word hi = Word::gen(indexed("h", i));
    return i < r ? conj(hi, by) : hi;
  });
  if (fix_b) m.set_family("b", [](std::int32_t i) { return Word::gen(indexed("b", i)); });
  return m;
}

CatalogEntry t_rules_entry(const std::string& name, std::int64_t m, bool with_b) {
  Presentation base;
  if (with_b) base.add_gen(indexed("b", static_cast<std::int32_t>(m - 1)));
  base.add_gen(plain("g"));
  for (std::int64_t i = 0; i < m; ++i) base.add_gen(indexed("h", static_cast<std::int32_t>(i)));
  std::vector<StableLetterRule> rules;
  for (std::int64_t r = 0; r < m; ++r) {
    StableLetterRule rule{indexed("t", static_cast<std::int32_t>(r)), {}};
    const GenMap phi = tr_map(r, 1, with_b);
    for (auto g : base.gens) rule.pairs.emplace_back(Word::gen(g), apply(phi, Word::gen(g)));
    rules.push_back(std::move(rule));
  }
  auto phi = [with_b](Gen t, const Word& w) { return apply(tr_map(t.index, 1, with_b), w); };
  auto phi_inv = [with_b](Gen t, const Word& w) { return apply(tr_map(t.index, -1, with_b), w); };
  RewriteSystem sys{name, in_family("t"), automorphism_rules("t_r", in_family("t"), phi, phi_inv)};
  const auto summary = std::string(with_b ? "G2" : "G1") + " *_{phi_0..phi_" + std::to_string(m - 1) +
                       "} (t_0..t_" + std::to_string(m - 1) + ") with phi_r conjugating g, h_i (i<r) by h_r";
  return {name, summary, hnn(base, rules), sys, rules};
}

CatalogEntry ex34_entry() {
  StableLetterRule t{plain("t"), {{G("b"), W("b^c")}, {G("c"), W("c^2")}}};
  StableLetterRule s{plain("s"), {{G("b"), G("b")}, {G("c"), W("c^2")}}};
  auto stable = [t = plain("t"), s = plain("s")](Gen x) { return x == t || x == s; };
  auto index_map = [](std::int64_t mul, std::int64_t add) {
    return [mul, add](Gen, const Word& w) {
      GenMap h;
      h.set_family("b", [mul, add](std::int32_t i) { return Word::gen(indexed("b", static_cast<std::int32_t>(mul * i + add))); });
      return apply(h, w);
    };
  };
  auto halve = [](std::int64_t sub) {
    return [sub](Gen, const Word& w) {
      GenMap h;
      h.set_family("b", [sub](std::int32_t i) { return Word::gen(indexed("b", static_cast<std::int32_t>((i - sub) / 2))); });
      return apply(h, w);
    };
  };
  auto whole = [](Gen, const Word& w) { return split_whole(w); };
  auto odd = [](Gen, const Word& w) {
    return split_free_factor(w, [](Gen x) { return is_indexed(x) && (x.index % 2 != 0); });
  };
  auto even = [](Gen, const Word& w) {
    return split_free_factor(w, [](Gen x) { return is_indexed(x) && (x.index % 2 == 0); });
  };
  RewriteSystem sys{"PAPER_EX34", stable,
                    {
                        {"t^-1 w", is_plain("t"), true, whole, index_map(2, 1)},
                        {"s^-1 w", is_plain("s"), true, whole, index_map(2, 0)},
                        {"t w", is_plain("t"), false, odd, halve(1)},
                        {"s w", is_plain("s"), false, even, halve(0)},
                    }};
  return {"PAPER_EX34", "G0 *_{phi,psi} (t,s); phi: b,c -> b^c,c^2, psi: b,c -> b,c^2; rewriting over the b_i",
          hnn(base_G0(), {t, s}), sys, {t, s}};
}

CatalogEntry delta_d_rules() {
  auto phi = [](Gen d, const Word& w) { return d_conj(w, d.index, 1); };
  auto phi_inv = [](Gen d, const Word& w) { return d_conj(w, d.index, -1); };
  RewriteSystem sys{"DELTA_D_RULES", in_family("d"), automorphism_rules("d_j", in_family("d"), phi, phi_inv)};
  return {"DELTA_D_RULES", "conjugation by d_j on <a, b_i>: b_i fixed for i>=j, a and b_i (i<j) conjugated by b_j",
          std::nullopt, sys, {}};
}

std::vector<efun::Tuple> omega_blocks() { return {{0, 0, 0}, {2, 5, 3}, {7, 2, 4}}; }

CatalogEntry omega_system(std::int64_t m) {
  Presentation p = free_presentation({plain("a"), plain("b"), plain("c"), plain("g"), plain("h"), plain("k"), plain("r")});
  for (const char* x : {"g", "h", "k"}) {
    for (std::int64_t i : {std::int64_t{-1}, m}) p.add_relator(commutator(G(x), b_gen(i)));
  }
  for (const auto& f : omega_blocks()) {
    if (static_cast<std::int64_t>(f.size()) != m) continue;
    const auto fn = efun::FinSuppFn::from_tuple(f);
    p.add_relator(conj(G("a"), encode(Kind::G, fn, m)) * encode(Kind::A, fn, m).inverse());
  }
  StableLetterRule r{plain("r"), {{G("a"), G("a")}, {G("b"), conj(G("b"), G("c").pow(m))}, {G("c"), G("c")}}};
  for (const auto& [d, img] : r.pairs) p.add_relator(conj(d, G("r")) * img.inverse());
  return {"OMEGA_SYSTEM",
          "truncated Omega': g,h,k commute with b_-1, b_m; a^{g_f} = a^{b_f} for f in B; r: a,b,c -> a,b^{c^m},c",
          p, std::nullopt, {r}};
}

Presentation lambda(const std::string& letter, const std::vector<Word>& L) {
  return rope_trick(base_G(), L, plain(letter));
}

std::vector<Word> L0() { return {b_gen(0), b_gen(1), b_gen(2), b_gen(3)}; }
std::vector<Word> L1() { return {G("a"), b_gen(-1), b_gen(-2), b_gen(-3)}; }

Presentation theta_presentation() {
  return amalgam(lambda("t", L0()), lambda("s", L1()), {{G("a"), G("a")}, {G("b"), G("b")}, {G("c"), G("c")}});
}

StableLetterRule psi_rule() {
  StableLetterRule d{plain("d"), {}};
  for (const char* x : {"a", "b", "c"}) {
    const Word xt = conj(G(x), G("t"));
    d.pairs.emplace_back(xt, xt);
  }
  const Word bs = conj(G("bR"), G("s"));
  for (const char* x : {"aR", "bR", "cR"}) {
    const Word xs = conj(G(x), G("s"));
    d.pairs.emplace_back(xs, conj(xs, bs));
  }
  return d;
}

StableLetterRule delta_rule() {
  return {plain("e"), {{G("a"), G("a")}, {G("b"), W("b^c")}, {G("c"), G("c")}}};
}

CatalogEntry tau_system() {
  const Presentation lam = lambda("t", {b_gen(-1), b_gen(-2), b_gen(2), b_gen(3)});
  StableLetterRule q{plain("q"),
                     {{G("a"), G("a")},
                      {b_gen(0), b_gen(1)},
                      {b_gen(1), b_gen(0)},
                      {conj(G("a"), G("t")), conj(G("a"), G("t"))},
                      {conj(G("b"), G("t")), conj(G("b"), G("t"))},
                      {conj(G("c"), G("t")), conj(G("c"), G("t"))}}};
  return {"TAU_SYSTEM", "Lambda *_xi q with xi swapping b_0, b_1 and fixing a, a^t, b^t, c^t", hnn(lam, {q}),
          std::nullopt, {q}};
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"GAMMA_EX32", "GAMMA_EX36", "DELTA_EX37", "PAPER_EX34", "DELTA_D_RULES", "OMEGA_SYSTEM",
          "PSI",        "DELTA",      "THETA_AMALGAM", "ROPE_DEMO", "TAU_SYSTEM"};
}

CatalogEntry catalog(const std::string& name, std::int64_t m) {
  if (m < 1) throw Error("m must be positive");
  if (name == "GAMMA_EX32") return gamma_ex32();
  if (name == "GAMMA_EX36") return t_rules_entry(name, m, false);
  if (name == "DELTA_EX37") return t_rules_entry(name, m, true);
  if (name == "PAPER_EX34") return ex34_entry();
  if (name == "DELTA_D_RULES") return delta_d_rules();
  if (name == "OMEGA_SYSTEM") return omega_system(m);
  if (name == "THETA_AMALGAM") {
    return {name, "Lambda_0 *_G Lambda_1, Lambda_0 = G *_{L0} t, Lambda_1 = G *_{L1} s (truncated L0, L1)",
            theta_presentation(), std::nullopt, {}};
  }
  if (name == "PSI") {
    auto d = psi_rule();
    return {name, "Theta *_omega d, omega fixing G^t and conjugating G^s by b^s", hnn(theta_presentation(), {d}),
            std::nullopt, {d}};
  }
  if (name == "DELTA") {
    auto e = delta_rule();
    return {name, "Psi *_delta e, delta: a,b,c -> a,b^c,c", hnn(hnn(theta_presentation(), {psi_rule()}), {e}),
            std::nullopt, {e}};
  }
  if (name == "ROPE_DEMO") {
    const auto k = gamma_ex32();
    return {name, "K *_L a0 for K = GAMMA_EX32 and L = <b, t>", rope_trick(*k.presentation, {G("b"), G("t")}, indexed("a", 0)),
            std::nullopt, {}};
  }
  if (name == "TAU_SYSTEM") return tau_system();
  throw UnknownName("no catalog entry named '" + name + "'");
}

}  // namespace higman
