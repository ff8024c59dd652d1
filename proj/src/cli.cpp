#include "higman/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "higman/construct.hpp"
#include "higman/efun.hpp"
#include "higman/error.hpp"
#include "higman/freeword.hpp"
#include "higman/subgroup.hpp"
#include "higman/syntax.hpp"
#include "higman/verify.hpp"

namespace higman {

namespace {

using json = nlohmann::ordered_json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string window = "-4..8";
  std::int64_t vmax = 9;
  std::string seed = "0xB16A";
  std::string format = "text";

  efun::EvalBounds bounds() const {
    const auto dots = window.find("..");
    if (dots == std::string::npos) throw Usage("--window expects lo..hi, got '" + window + "'");
    efun::EvalBounds b;
    try {
      b.lo = std::stoll(window.substr(0, dots));
      b.hi = std::stoll(window.substr(dots + 2));
    } catch (const std::exception&) {
      throw Usage("--window expects lo..hi, got '" + window + "'");
    }
    if (b.hi < b.lo) throw Usage("--window: hi < lo");
    if (vmax < 0) throw Usage("--vmax must be nonnegative");
    b.vmax = vmax;
    return b;
  }
  std::uint64_t seed_value() const {
    try {
      return std::stoull(seed, nullptr, 0);
    } catch (const std::exception&) {
      throw Usage("--seed expects an integer, got '" + seed + "'");
    }
  }
  bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--window", c.window, "index window lo..hi")->allow_extra_args(false);
  app->add_option("--vmax", c.vmax, "bound on absolute values");
  app->add_option("--seed", c.seed, "seed for randomized checks");
  app->add_option("--format", c.format, "text|structured")->check(CLI::IsMember({"text", "structured"}));
}

// Splits on commas outside brackets.
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<Word> word_list(const std::string& s) {
  std::vector<Word> out;
  for (const auto& item : split_list(s)) out.push_back(parse_word(item));
  return out;
}

std::vector<std::pair<Word, Word>> pair_list(const std::string& s) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& item : split_list(s)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Usage("expected u=v in '" + item + "'");
    out.emplace_back(parse_word(item.substr(0, eq)), parse_word(item.substr(eq + 1)));
  }
  return out;
}

// "b" is a letter, "b*" the whole family b_i.
GenSet gen_set(const std::string& s) {
  GenSet g;
  for (auto item : split_list(s)) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty() && item.back() == '*') {
      g.add_family(item.substr(0, item.size() - 1));
      continue;
    }
    const auto w = parse_word(item);
    if (w.size() != 1 || w[0].inverse) throw Usage("'" + item + "' is not a generator");
    g.add(w[0].gen);
  }
  return g;
}

Presentation load_presentation(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) {
    auto entry = catalog(source.substr(8));
    if (!entry.presentation) throw Usage(source + " has no presentation");
    return *entry.presentation;
  }
  std::ifstream in(source);
  if (!in) throw Usage("cannot read " + source);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string fn_text(const efun::FinSuppFn& f, const efun::EvalBounds& b) {
  if (b.lo < 0 || b.hi <= 0) return efun::format(f);
  std::string s = "(";
  for (std::int64_t i = 0; i < b.hi; ++i) s += (i ? "," : "") + std::to_string(f(i));
  return s + ")";
}

Word expand_families(const Word& w) {
  GenMap h;
  h.fix_others();
  h.set_family("b", [](std::int32_t i) { return b_gen(i); });
  h.set_family("h", [](std::int32_t i) { return h_gen(i); });
  return apply(h, w);
}

void emit(std::ostream& out, const Common& c, const std::string& text, const json& doc) {
  if (c.structured()) {
    out << doc.dump(2) << "\n";
  } else if (!text.empty()) {
    out << text;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higman operations, word encodings, subgroup graphs and presentations"};
  app.name("higman");
  app.require_subcommand(1);
  Common c;
  int code = 0;

  std::string expr_s, fn_s, word_s, gens_s, with_s, x_s, y_s, src_s, src2_s, pairs_s, letter_s = "t", case_s, blocks_s,
      name_s;
  std::int64_t j = 0, m = 3;
  bool inverse = false, expanded = false, no_rename = false;

  auto* eval = app.add_subcommand("eval", "enumerate a set expression inside the window");
  eval->add_option("expr", expr_s)->required();
  add_common(eval, c);
  eval->callback([&] {
    const auto b = c.bounds();
    const auto e = parse_expr(expr_s);
    const auto fns = efun::enumerate_list(e, b);
    std::string text;
    json members = json::array();
    for (const auto& f : fns) {
      text += fn_text(f, b) + "\n";
      members.push_back(fn_text(f, b));
    }
    emit(out, c, text, {{"expr", efun::to_string(e)}, {"window", {b.lo, b.hi}}, {"vmax", b.vmax}, {"members", members}});
  });

  auto* mem = app.add_subcommand("member", "decide f in e; exit 0 In, 1 Out, 3 Unknown");
  mem->add_option("tuple", fn_s)->required();
  mem->add_option("expr", expr_s)->required();
  add_common(mem, c);
  mem->callback([&] {
    const auto b = c.bounds();
    const auto v = efun::member(parse_fn(fn_s), parse_expr(expr_s), b);
    auto text = efun::to_string(v.verdict);
    if (v.is_unknown()) text += ": " + v.reason;
    emit(out, c, text + "\n", {{"verdict", efun::to_string(v.verdict)}, {"reason", v.reason}});
    code = v.is_in() ? 0 : (v.is_out() ? 1 : 3);
  });

  auto* red = app.add_subcommand("reduce", "freely reduce a word");
  red->add_option("word", word_s)->required();
  red->add_flag("--expanded", expanded, "write b_i, h_i over b, c and h, k");
  add_common(red, c);
  red->callback([&] {
    auto w = parse_word(word_s);
    if (expanded) w = expand_families(w);
    emit(out, c, format_word(w) + "\n", {{"word", format_word(w)}, {"length", w.size()}});
  });

  auto* col = app.add_subcommand("collect", "write w as Y-conjugates of X-letters times a Y-word");
  col->add_option("word", word_s)->required();
  col->add_option("--x", x_s, "letters of X; name* for a family")->required();
  col->add_option("--y", y_s, "letters of Y; name* for a family")->required();
  add_common(col, c);
  col->callback([&] {
    const auto r = collect(parse_word(word_s), gen_set(x_s), gen_set(y_s));
    std::string text;
    json factors = json::array();
    for (const auto& f : r.factors) {
      auto s = format_word(Word::gen(f.x, f.inverse ? -1 : 1));
      if (!f.v.empty()) s += "^(" + format_word(f.v) + ")";
      text += s + "\n";
      factors.push_back({{"x", gen_name(f.x)}, {"inverse", f.inverse}, {"conjugator", format_word(f.v)}});
    }
    text += "tail: " + format_word(r.tail) + "\n";
    emit(out, c, text, {{"factors", factors}, {"tail", format_word(r.tail)}});
  });

  auto* sub = app.add_subcommand("subgroup", "Stallings graph queries");
  sub->require_subcommand(1);
  auto* sub_member = sub->add_subcommand("member", "is w in <gens>; exit 0 yes, 1 no");
  sub_member->add_option("word", word_s)->required();
  sub_member->add_option("--gens", gens_s)->required();
  add_common(sub_member, c);
  sub_member->callback([&] {
    const auto g = SubgroupGraph::of(word_list(gens_s));
    const auto w = parse_word(word_s);
    const bool in = g.contains(w);
    auto text = std::string(in ? "yes" : "no") + "\n";
    json doc = {{"member", in}};
    if (!in) {
      const auto cs = g.coset_representative(w);
      text += "coset: " + format_word(cs.rep) + "\n";
      doc["coset"] = format_word(cs.rep);
    }
    emit(out, c, text, doc);
    code = in ? 0 : 1;
  });
  auto print_basis = [&](const SubgroupGraph& g) {
    std::string text = "rank " + std::to_string(g.rank()) + "\n";
    json basis = json::array();
    for (const auto& w : g.basis()) {
      text += format_word(w) + "\n";
      basis.push_back(format_word(w));
    }
    emit(out, c, text, {{"rank", g.rank()}, {"vertices", g.num_vertices()}, {"basis", basis}});
  };
  auto* sub_basis = sub->add_subcommand("basis", "free basis of <gens>");
  sub_basis->add_option("--gens", gens_s)->required();
  add_common(sub_basis, c);
  sub_basis->callback([&] { print_basis(SubgroupGraph::of(word_list(gens_s))); });
  auto* sub_int = sub->add_subcommand("intersect", "<gens> cap <with>");
  sub_int->add_option("--gens", gens_s)->required();
  sub_int->add_option("--with", with_s)->required();
  add_common(sub_int, c);
  sub_int->callback([&] {
    print_basis(intersect(SubgroupGraph::of(word_list(gens_s)), SubgroupGraph::of(word_list(with_s))));
  });

  auto* pres = app.add_subcommand("present", "emit presentations; FILE may be catalog:NAME");
  pres->require_subcommand(1);
  auto print_pres = [&](const Presentation& p) {
    json rels = json::array();
    for (const auto& r : p.relators) rels.push_back(format_word(r));
    json gens = json::array();
    for (const auto& g : p.gens) gens.push_back(gen_name(g));
    emit(out, c, to_text(p), {{"gens", gens}, {"relators", rels}});
  };
  auto* hnn_c = pres->add_subcommand("hnn", "base plus a stable letter");
  hnn_c->add_option("--base", src_s)->required();
  hnn_c->add_option("--letter", letter_s);
  hnn_c->add_option("--pairs", pairs_s, "d=image,...")->required();
  add_common(hnn_c, c);
  hnn_c->callback([&] {
    const auto w = parse_word(letter_s);
    if (w.size() != 1) throw Usage("--letter must be a single generator");
    print_pres(hnn(load_presentation(src_s), {StableLetterRule{w[0].gen, pair_list(pairs_s)}}));
  });
  auto* am = pres->add_subcommand("amalgam", "free product with amalgamation");
  am->add_option("--left", src_s)->required();
  am->add_option("--right", src2_s)->required();
  am->add_option("--pairs", pairs_s, "u=v,...")->required();
  am->add_flag("--no-rename", no_rename, "fail on clashing generator names");
  add_common(am, c);
  am->callback([&] {
    print_pres(amalgam(load_presentation(src_s), load_presentation(src2_s), pair_list(pairs_s), !no_rename));
  });
  auto* rope = pres->add_subcommand("rope", "K plus a letter commuting with L");
  rope->add_option("--k", src_s)->required();
  rope->add_option("--lgens", gens_s)->required();
  rope->add_option("--letter", letter_s);
  add_common(rope, c);
  rope->callback([&] {
    const auto w = parse_word(letter_s);
    if (w.size() != 1) throw Usage("--letter must be a single generator");
    print_pres(rope_trick(load_presentation(src_s), word_list(gens_s), w[0].gen));
  });
  auto* cat = pres->add_subcommand("catalog", "list entries, or print one");
  cat->add_option("name", name_s);
  cat->add_option("--m", m, "block length for m-dependent entries");
  add_common(cat, c);
  cat->callback([&] {
    if (name_s.empty()) {
      std::string text;
      json list = json::array();
      for (const auto& n : catalog_names()) {
        const auto e = catalog(n, m);
        text += n + "  " + e.summary + "\n";
        list.push_back({{"name", n}, {"summary", e.summary}});
      }
      emit(out, c, text, list);
      return;
    }
    const auto e = catalog(name_s, m);
    if (!e.presentation) {
      emit(out, c, "# " + e.summary + "\n# rewrite system only\n", {{"name", e.name}, {"summary", e.summary}});
      return;
    }
    print_pres(*e.presentation);
  });

  auto* dc = app.add_subcommand("dconj", "w^{d_j} over a and b_i");
  dc->add_option("word", word_s)->required();
  dc->add_option("--j", j)->required();
  dc->add_flag("--inverse", inverse, "conjugate by d_j^-1");
  add_common(dc, c);
  dc->callback([&] {
    const auto w = d_conj(parse_word(word_s), j, inverse ? -1 : 1);
    emit(out, c, format_word(w) + "\n", {{"word", format_word(w)}});
  });

  auto* ow = app.add_subcommand("omega-walk", "derive a^{b_l} from a block by block");
  ow->add_option("l", fn_s)->required();
  ow->add_option("--m", m)->required();
  ow->add_option("--blocks", blocks_s, "tuples in B, e.g. (0),(2,5,3)")->required();
  add_common(ow, c);
  ow->callback([&] {
    if (m < 1) throw Usage("--m must be positive");
    std::vector<efun::Tuple> B;
    for (const auto& t : split_list(blocks_s)) {
      auto tup = efun::to_tuple(parse_fn(t));
      tup.resize(static_cast<std::size_t>(m), 0);
      B.push_back(tup);
    }
    const auto oracle = [&](const efun::Tuple& t) {
      auto p = t;
      p.resize(static_cast<std::size_t>(m), 0);
      return std::find(B.begin(), B.end(), p) != B.end();
    };
    const auto tr = omega_walk(parse_fn(fn_s), m, oracle);
    const auto problem = check_walk(tr, oracle);
    std::string text;
    json stages = json::array();
    for (std::size_t i = 0; i < tr.stages.size(); ++i) {
      const auto& s = tr.stages[i];
      text += std::to_string(i + 1) + ". " + s.label + " by " + format_word(s.conjugator) + ": " + format_word(s.after) +
              "\n";
      stages.push_back({{"label", s.label}, {"conjugator", format_word(s.conjugator)}, {"after", format_word(s.after)}});
    }
    text += "result: " + format_word(tr.result) + "\n";
    text += "check: " + (problem.empty() ? std::string("ok") : problem) + "\n";
    emit(out, c, text, {{"stages", stages}, {"result", format_word(tr.result)}, {"check", problem.empty() ? "ok" : problem}});
    code = problem.empty() ? 0 : 1;
  });

  auto* ver = app.add_subcommand("verify", "run the verification catalog: all or a case id");
  ver->add_option("case", case_s)->required();
  add_common(ver, c);
  ver->callback([&] {
    const auto seed = c.seed_value();
    std::vector<verify::CaseReport> reports;
    if (case_s == "all") {
      reports = verify::run_all(seed);
    } else if (case_s == "list") {
      for (const auto& id : verify::case_ids()) out << id << "\n";
      return;
    } else {
      reports.push_back(verify::run_case(case_s, seed));
    }
    out << (c.structured() ? verify::to_json(reports) : verify::to_text(reports));
    for (const auto& r : reports) code = r.pass ? code : 1;
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownCase& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  return code;
}

}  // namespace higman
