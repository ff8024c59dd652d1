// Bounded witness search for membership in Higman-operation expressions.
//
// A query is a Pattern: every coordinate is either pinned to a value, a
// variable, or "clipped" (a witness coordinate that the operation leaves free
// but which lies outside the propagated window, so it is held at 0). Unary
// operations rewrite the pattern for their child; the search emits
// assignments of the variables, where a variable may be bound to "any value".
// Atoms solve their constraints directly, so whole boxes of solutions are
// produced without scanning candidates.
//
// Completeness: a search is incomplete when a clipped coordinate took part in
// a constraint or an internal witness variable hit the value bound. Only an
// incomplete failed search yields Unknown.

#include <algorithm>
#include <functional>
#include <set>

#include "higman/efun.hpp"
#include "higman/error.hpp"

namespace higman::efun {

namespace {

using Value = std::optional<std::int64_t>;  // nullopt: any value
using Assignment = std::map<int, Value>;
using Sink = std::function<bool(const Assignment&)>;  // true: stop
using Freed = std::function<bool(std::int64_t)>;

struct Window {
  std::int64_t lo;
  std::int64_t hi;
  bool contains(std::int64_t x) const { return lo <= x && x < hi; }
};

Window hull(Window a, Window b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

struct Pattern {
  std::map<std::int64_t, std::int64_t> fixed;  // pinned coordinates (may be 0)
  std::map<std::int64_t, int> vars;            // coordinate -> variable id
  Freed freed = [](std::int64_t) { return false; };
  Window window{0, 0};
};

struct Slot {
  enum class Kind { Fixed, Var, Clipped } kind;
  std::int64_t value = 0;
  int var = -1;
};

Slot slot_at(const Pattern& p, std::int64_t x) {
  if (auto it = p.fixed.find(x); it != p.fixed.end()) return {Slot::Kind::Fixed, it->second, -1};
  if (auto it = p.vars.find(x); it != p.vars.end()) return {Slot::Kind::Var, 0, it->second};
  if (p.freed(x)) return {Slot::Kind::Clipped, 0, -1};
  return {Slot::Kind::Fixed, 0, -1};
}

struct Result {
  bool stopped = false;
  bool incomplete = false;
};

struct Ctx {
  std::int64_t vmax;
  std::vector<bool> internal;  // per variable id
  std::vector<const SetExpr*> witness_nodes;
  std::string reason;

  int new_var(bool is_internal) {
    internal.push_back(is_internal);
    return static_cast<int>(internal.size()) - 1;
  }

  void note(const std::string& what) {
    if (!reason.empty()) return;
    reason = what;
    if (!witness_nodes.empty()) reason += " (witness of " + to_string(*witness_nodes.back()) + ")";
  }
};

Result search(const Pattern& p, const SetExpr& e, Ctx& ctx, const Sink& sink);

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  auto q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// --- atoms -----------------------------------------------------------------

Result atom_zero(const Pattern& p, const Sink& sink) {
  for (const auto& [x, v] : p.fixed) {
    if (v != 0) return {};
  }
  Assignment a;
  for (const auto& [x, var] : p.vars) a[var] = 0;
  return {sink(a), false};
}

Result atom_succ(const Pattern& p, Ctx& ctx, const Sink& sink) {
  for (const auto& [x, v] : p.fixed) {
    if (v != 0 && x != 0 && x != 1) return {};
  }
  Assignment base;
  for (const auto& [x, var] : p.vars) {
    if (x != 0 && x != 1) base[var] = 0;
  }
  const Slot s0 = slot_at(p, 0);
  const Slot s1 = slot_at(p, 1);
  const bool clipped = s0.kind == Slot::Kind::Clipped || s1.kind == Slot::Kind::Clipped;
  const auto V = ctx.vmax;
  Result r;
  if (clipped) {
    r.incomplete = true;
    ctx.note("witness coordinate of S outside the window");
  }

  const bool v0 = s0.kind == Slot::Kind::Var;
  const bool v1 = s1.kind == Slot::Kind::Var;
  if (!v0 && !v1) {
    if (s1.value == s0.value + 1) r.stopped = sink(base);
    return r;
  }
  if (v0 != v1) {
    const int var = v0 ? s0.var : s1.var;
    const std::int64_t need = v0 ? s1.value - 1 : s0.value + 1;
    if (need >= -V && need <= V) {
      Assignment a = base;
      a[var] = need;
      r.stopped = sink(a);
    } else if (ctx.internal[static_cast<std::size_t>(var)]) {
      r.incomplete = true;
      ctx.note("value bound vmax=" + std::to_string(V));
    }
    return r;
  }
  if (ctx.internal[static_cast<std::size_t>(s0.var)] || ctx.internal[static_cast<std::size_t>(s1.var)]) {
    r.incomplete = true;
    ctx.note("value bound vmax=" + std::to_string(V));
  }
  for (std::int64_t a0 = -V; a0 + 1 <= V; ++a0) {
    Assignment a = base;
    a[s0.var] = a0;
    a[s1.var] = a0 + 1;
    if (sink(a)) {
      r.stopped = true;
      break;
    }
  }
  return r;
}

Result atom_box(const Pattern& p, std::int64_t m, const Sink& sink) {
  for (const auto& [x, v] : p.fixed) {
    if (v != 0 && (x < 0 || x >= m)) return {};
  }
  Assignment a;
  for (const auto& [x, var] : p.vars) {
    if (x >= 0 && x < m) {
      a[var] = std::nullopt;
    } else {
      a[var] = 0;
    }
  }
  return {sink(a), false};
}

// --- unary operations --------------------------------------------------------

/// Child pattern for an index-moving operation. `to_child` maps a parent
/// coordinate to its child coordinate, or nullopt when the operation leaves
/// the parent coordinate unconstrained.
template <typename ToChild>
Pattern remap(const Pattern& p, ToChild to_child, Freed freed, Window w, std::vector<int>& dropped) {
  Pattern c;
  c.freed = std::move(freed);
  c.window = w;
  for (const auto& [x, v] : p.fixed) {
    if (auto y = to_child(x)) c.fixed[*y] = v;
  }
  for (const auto& [x, var] : p.vars) {
    if (auto y = to_child(x)) {
      c.vars[*y] = var;
    } else {
      dropped.push_back(var);
    }
  }
  return c;
}

/// Restricts a child emission to the parent's variables; dropped variables
/// are unconstrained.
Assignment project(const Assignment& child, const Pattern& parent, const std::vector<int>& dropped) {
  Assignment out;
  for (const auto& [x, var] : parent.vars) {
    if (auto it = child.find(var); it != child.end()) out[var] = it->second;
  }
  for (int var : dropped) out[var] = std::nullopt;
  return out;
}

Result unary(const Pattern& p, const SetExpr& e, Ctx& ctx, const Sink& sink) {
  const auto& child = e.child(0);
  const Window w = p.window;
  const Freed pf = p.freed;
  std::vector<int> dropped;
  Pattern c;
  bool witness = false;

  switch (e.op()) {
    case Op::Rho:
      c = remap(p, [](std::int64_t x) -> std::optional<std::int64_t> { return -x; },
                [pf](std::int64_t x) { return pf(-x); }, hull(w, {-(w.hi - 1), -w.lo + 1}), dropped);
      break;
    case Op::Sigma:
      c = remap(p, [](std::int64_t x) -> std::optional<std::int64_t> { return x - 1; },
                [pf](std::int64_t x) { return pf(x + 1); }, {w.lo - 1, w.hi}, dropped);
      break;
    case Op::Tau: {
      auto swap01 = [](std::int64_t x) -> std::int64_t { return x == 0 ? 1 : (x == 1 ? 0 : x); };
      c = remap(p, [swap01](std::int64_t x) -> std::optional<std::int64_t> { return swap01(x); },
                [pf, swap01](std::int64_t x) { return pf(swap01(x)); }, hull(w, {0, 2}), dropped);
      break;
    }
    case Op::Theta: {
      const Window cw = hull(w, {2 * w.lo, 2 * w.hi});
      c = remap(p, [](std::int64_t x) -> std::optional<std::int64_t> { return 2 * x; },
                [pf](std::int64_t x) { return (x % 2 != 0) || pf(x / 2); }, cw, dropped);
      for (std::int64_t x = cw.lo; x < cw.hi; ++x) {
        if (x % 2 != 0) c.vars[x] = ctx.new_var(true);
      }
      witness = true;
      break;
    }
    case Op::Zeta: {
      const Window cw = hull(w, {0, 1});
      c = remap(p, [](std::int64_t x) -> std::optional<std::int64_t> {
            if (x == 0) return std::nullopt;
            return x;
          },
          [pf](std::int64_t x) { return x == 0 || pf(x); }, cw, dropped);
      c.vars[0] = ctx.new_var(true);
      witness = true;
      break;
    }
    case Op::Pi: {
      c = remap(p, [](std::int64_t x) -> std::optional<std::int64_t> {
            if (x > 0) return std::nullopt;
            return x;
          },
          [pf](std::int64_t x) { return x > 0 || pf(x); }, w, dropped);
      for (std::int64_t x = std::max<std::int64_t>(1, w.lo); x < w.hi; ++x) c.vars[x] = ctx.new_var(true);
      witness = true;
      break;
    }
    default:
      throw Error("internal: not a unary index operation");
  }

  if (witness) ctx.witness_nodes.push_back(&e);
  Result r = search(c, child, ctx, [&](const Assignment& a) { return sink(project(a, p, dropped)); });
  if (witness) ctx.witness_nodes.pop_back();
  return r;
}

// --- binary and block operations --------------------------------------------

Pattern pin(const Pattern& p, const Assignment& a) {
  Pattern q = p;
  for (auto it = q.vars.begin(); it != q.vars.end();) {
    auto f = a.find(it->second);
    if (f != a.end() && f->second.has_value()) {
      q.fixed[it->first] = *f->second;
      it = q.vars.erase(it);
    } else {
      ++it;
    }
  }
  return q;
}

Result intersection(const Pattern& p, const SetExpr& e, Ctx& ctx, const Sink& sink) {
  bool incomplete = false;
  Result ra = search(p, e.child(0), ctx, [&](const Assignment& a) {
    const Pattern q = pin(p, a);
    Result rb = search(q, e.child(1), ctx, [&](const Assignment& b) {
      Assignment merged = a;
      for (const auto& [var, val] : b) merged[var] = val;
      return sink(merged);
    });
    incomplete = incomplete || rb.incomplete;
    return rb.stopped;
  });
  return {ra.stopped, ra.incomplete || incomplete};
}

Result union_of(const Pattern& p, const SetExpr& e, Ctx& ctx, const Sink& sink) {
  Result ra = search(p, e.child(0), ctx, sink);
  if (ra.stopped) return ra;
  Result rb = search(p, e.child(1), ctx, sink);
  return {rb.stopped, ra.incomplete || rb.incomplete};
}

Result blockwise(const Pattern& p, const SetExpr& e, Ctx& ctx, const Sink& sink) {
  const auto m = e.arity_param();
  const auto& child = e.child(0);
  const Window cw = hull({m * p.window.lo, m * p.window.hi}, {0, m});

  // Without the zero tuple in the child no function has all blocks in it.
  Pattern zero;
  zero.window = cw;
  Result rz = search(zero, child, ctx, [](const Assignment&) { return true; });
  if (!rz.stopped) return {false, rz.incomplete};

  std::set<std::int64_t> relevant;
  for (const auto& [x, v] : p.fixed) {
    if (v != 0) relevant.insert(floor_div(x, m));
  }
  for (const auto& [x, var] : p.vars) relevant.insert(floor_div(x, m));
  const std::vector<std::int64_t> order(relevant.begin(), relevant.end());

  bool incomplete = false;
  std::function<bool(std::size_t, const Assignment&)> go = [&](std::size_t k, const Assignment& acc) -> bool {
    if (k == order.size()) return sink(acc);
    const auto blk = order[k];
    Pattern c;
    c.window = cw;
    const Freed pf = p.freed;
    c.freed = [pf, blk, m](std::int64_t r) { return r >= 0 && r < m && pf(m * blk + r); };
    std::vector<int> block_vars;
    for (std::int64_t r = 0; r < m; ++r) {
      const Slot s = slot_at(p, m * blk + r);
      if (s.kind == Slot::Kind::Fixed) {
        c.fixed[r] = s.value;
      } else if (s.kind == Slot::Kind::Var) {
        c.vars[r] = s.var;
        block_vars.push_back(s.var);
      }
    }
    Result r = search(c, child, ctx, [&](const Assignment& a) {
      Assignment next = acc;
      for (int var : block_vars) {
        if (auto it = a.find(var); it != a.end()) next[var] = it->second;
      }
      return go(k + 1, next);
    });
    incomplete = incomplete || r.incomplete;
    return r.stopped;
  };
  const bool stopped = go(0, Assignment{});
  return {stopped, incomplete};
}

Result search(const Pattern& p, const SetExpr& e, Ctx& ctx, const Sink& sink) {
  switch (e.op()) {
    case Op::Zero: return atom_zero(p, sink);
    case Op::Succ: return atom_succ(p, ctx, sink);
    case Op::Box: return atom_box(p, e.arity_param(), sink);
    case Op::Iota: return intersection(p, e, ctx, sink);
    case Op::Upsilon: return union_of(p, e, ctx, sink);
    case Op::Omega: return blockwise(p, e, ctx, sink);
    default: return unary(p, e, ctx, sink);
  }
}

}  // namespace

Membership member(const FinSuppFn& f, const SetExpr& e, const EvalBounds& b) {
  Pattern p;
  p.window = {b.lo, b.hi};
  for (const auto& [i, v] : f.entries()) p.fixed[i] = v;
  Ctx ctx{b.vmax, {}, {}, {}};
  const Result r = search(p, e, ctx, [](const Assignment&) { return true; });
  if (r.stopped) return Membership::in();
  if (r.incomplete) return Membership::unknown(ctx.reason.empty() ? "bound reached" : ctx.reason);
  return Membership::out();
}

FunctionSet enumerate(const SetExpr& e, const EvalBounds& b) {
  if (b.lo > b.hi) throw Error("window must satisfy lo <= hi");
  Pattern p;
  p.window = {b.lo, b.hi};
  Ctx ctx{b.vmax, {}, {}, {}};
  std::vector<int> coord_var;
  for (auto x = b.lo; x < b.hi; ++x) {
    const int var = ctx.new_var(false);
    p.vars[x] = var;
    coord_var.push_back(var);
  }
  std::set<FunctionSet::Box> boxes;
  const Result r = search(p, e, ctx, [&](const Assignment& a) {
    FunctionSet::Box box;
    box.reserve(coord_var.size());
    for (int var : coord_var) {
      auto it = a.find(var);
      box.push_back(it == a.end() ? Value{} : it->second);
    }
    boxes.insert(std::move(box));
    return false;
  });
  if (r.incomplete) {
    throw BoundTooTight("enumeration of " + to_string(e) + " is incomplete: " + ctx.reason);
  }
  return FunctionSet(b, {boxes.begin(), boxes.end()});
}

std::vector<FinSuppFn> enumerate_list(const SetExpr& e, const EvalBounds& b, std::uint64_t limit) {
  return enumerate(e, b).expand(limit);
}

// ---------------------------------------------------------------------------

namespace {

using Box = FunctionSet::Box;

bool disjoint(const Box& x, const Box& y) {
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c] && y[c] && *x[c] != *y[c]) return true;
  }
  return false;
}

bool includes(const Box& outer, const Box& inner) {
  for (std::size_t c = 0; c < outer.size(); ++c) {
    if (outer[c] && (!inner[c] || *inner[c] != *outer[c])) return false;
  }
  return true;
}

bool covered(const Box& x, const std::vector<const Box*>& ys, std::int64_t vmax) {
  std::vector<const Box*> live;
  for (const Box* y : ys) {
    if (!disjoint(x, *y)) live.push_back(y);
  }
  for (const Box* y : live) {
    if (includes(*y, x)) return true;
  }
  if (live.empty()) return false;

  // split on a coordinate that is free in x but pinned somewhere in live
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c]) continue;
    std::set<std::int64_t> pinned;
    for (const Box* y : live) {
      if ((*y)[c]) pinned.insert(*(*y)[c]);
    }
    if (pinned.empty()) continue;
    for (auto v : pinned) {
      if (v < -vmax || v > vmax) continue;
      Box xv = x;
      xv[c] = v;
      if (!covered(xv, live, vmax)) return false;
    }
    if (static_cast<std::int64_t>(pinned.size()) >= 2 * vmax + 1) return true;
    // remaining values are treated alike by every live box
    std::vector<const Box*> rest;
    for (const Box* y : live) {
      if (!(*y)[c]) rest.push_back(y);
    }
    return covered(x, rest, vmax);
  }
  return false;
}

std::vector<Box> subtract(const Box& x, const Box& y, std::int64_t vmax) {
  if (disjoint(x, y)) return {x};
  std::vector<Box> out;
  Box cur = x;
  for (std::size_t c = 0; c < y.size(); ++c) {
    if (!y[c] || cur[c]) continue;
    for (std::int64_t u = -vmax; u <= vmax; ++u) {
      if (u == *y[c]) continue;
      Box piece = cur;
      piece[c] = u;
      out.push_back(std::move(piece));
    }
    cur[c] = y[c];
  }
  return out;
}

std::vector<Box> disjoint_cover(const std::vector<Box>& boxes, std::int64_t vmax) {
  std::vector<Box> done;
  for (const auto& b : boxes) {
    std::vector<Box> pieces{b};
    for (const auto& d : done) {
      std::vector<Box> next;
      for (const auto& piece : pieces) {
        auto parts = subtract(piece, d, vmax);
        next.insert(next.end(), parts.begin(), parts.end());
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    done.insert(done.end(), pieces.begin(), pieces.end());
  }
  return done;
}

std::uint64_t box_size(const Box& b, std::int64_t vmax) {
  std::uint64_t n = 1;
  const auto span = static_cast<std::uint64_t>(2 * vmax + 1);
  for (const auto& c : b) {
    if (c) continue;
    if (n > UINT64_MAX / span) return UINT64_MAX;
    n *= span;
  }
  return n;
}

}  // namespace

FunctionSet::FunctionSet(EvalBounds bounds, std::vector<Box> boxes) : bounds_(bounds) {
  const auto width = static_cast<std::size_t>(bounds.width());
  for (auto& b : boxes) {
    if (b.size() != width) throw Error("box width does not match the window");
    bool inside = true;
    for (const auto& c : b) {
      if (c && (*c < -bounds.vmax || *c > bounds.vmax)) inside = false;
    }
    if (inside) boxes_.push_back(std::move(b));
  }
  std::sort(boxes_.begin(), boxes_.end());
  boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
}

bool FunctionSet::contains(const FinSuppFn& f) const {
  if (!bounds_.fits(f)) return false;
  for (const auto& b : boxes_) {
    bool ok = true;
    for (std::size_t c = 0; c < b.size() && ok; ++c) {
      if (b[c] && *b[c] != f(bounds_.lo + static_cast<std::int64_t>(c))) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

bool FunctionSet::subset_of(const FunctionSet& other) const {
  if (bounds_.lo != other.bounds_.lo || bounds_.hi != other.bounds_.hi || bounds_.vmax != other.bounds_.vmax) {
    throw Error("function sets over different bounds are not comparable");
  }
  std::vector<const Box*> ys;
  for (const auto& b : other.boxes_) ys.push_back(&b);
  for (const auto& b : boxes_) {
    if (!covered(b, ys, bounds_.vmax)) return false;
  }
  return true;
}

bool FunctionSet::equals(const FunctionSet& other) const { return subset_of(other) && other.subset_of(*this); }

std::uint64_t FunctionSet::size() const {
  std::uint64_t n = 0;
  for (const auto& b : disjoint_cover(boxes_, bounds_.vmax)) {
    const auto s = box_size(b, bounds_.vmax);
    n = (UINT64_MAX - n < s) ? UINT64_MAX : n + s;
  }
  return n;
}

std::vector<FinSuppFn> FunctionSet::expand(std::uint64_t limit) const {
  const auto cover = disjoint_cover(boxes_, bounds_.vmax);
  std::uint64_t total = 0;
  for (const auto& b : cover) {
    const auto s = box_size(b, bounds_.vmax);
    total = (UINT64_MAX - total < s) ? UINT64_MAX : total + s;
  }
  if (total > limit) {
    throw EnumerationTooLarge("set has " + std::to_string(total) + " members, above the limit of " +
                              std::to_string(limit));
  }
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(total);
  for (const auto& b : cover) {
    std::vector<std::int64_t> row(b.size());
    std::function<void(std::size_t)> fill = [&](std::size_t c) {
      if (c == b.size()) {
        rows.push_back(row);
        return;
      }
      if (b[c]) {
        row[c] = *b[c];
        fill(c + 1);
        return;
      }
      for (auto v = -bounds_.vmax; v <= bounds_.vmax; ++v) {
        row[c] = v;
        fill(c + 1);
      }
    };
    fill(0);
  }
  std::sort(rows.begin(), rows.end());
  std::vector<FinSuppFn> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::map<std::int64_t, std::int64_t> m;
    for (std::size_t c = 0; c < row.size(); ++c) m[bounds_.lo + static_cast<std::int64_t>(c)] = row[c];
    out.push_back(normalize(m));
  }
  return out;
}

FunctionSet FunctionSet::of(EvalBounds bounds, const std::vector<FinSuppFn>& fns) {
  std::vector<Box> boxes;
  for (const auto& f : fns) {
    if (!bounds.fits(f)) throw Error("function " + format(f) + " does not fit the bounds");
    Box b(static_cast<std::size_t>(bounds.width()));
    for (std::size_t c = 0; c < b.size(); ++c) b[c] = f(bounds.lo + static_cast<std::int64_t>(c));
    boxes.push_back(std::move(b));
  }
  return FunctionSet(bounds, std::move(boxes));
}

}  // namespace higman::efun
