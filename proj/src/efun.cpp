#include "higman/efun.hpp"

#include <sstream>

#include "higman/error.hpp"

namespace higman::efun {

FinSuppFn normalize(const std::map<std::int64_t, std::int64_t>& values) {
  FinSuppFn f;
  for (const auto& [i, v] : values) {
    if (v != 0) f.entries_.emplace(i, v);
  }
  return f;
}

FinSuppFn FinSuppFn::from_tuple(const Tuple& values) {
  std::map<std::int64_t, std::int64_t> m;
  for (std::size_t i = 0; i < values.size(); ++i) m[static_cast<std::int64_t>(i)] = values[i];
  return normalize(m);
}

std::int64_t FinSuppFn::operator()(std::int64_t i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? 0 : it->second;
}

std::optional<std::int64_t> FinSuppFn::min_index() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.begin()->first;
}

std::optional<std::int64_t> FinSuppFn::max_index() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first;
}

FinSuppFn FinSuppFn::with(std::int64_t i, std::int64_t v) const {
  FinSuppFn g = *this;
  if (v == 0) {
    g.entries_.erase(i);
  } else {
    g.entries_[i] = v;
  }
  return g;
}

Tuple to_tuple(const FinSuppFn& f) {
  if (f.is_zero()) return {0};
  if (*f.min_index() < 0) {
    throw NegativeSupport("function " + format(f) + " has support below 0");
  }
  Tuple t(static_cast<std::size_t>(*f.max_index() + 1), 0);
  for (const auto& [i, v] : f.entries()) t[static_cast<std::size_t>(i)] = v;
  return t;
}

FinSuppFn bump(const FinSuppFn& f, std::int64_t m, Dir dir) {
  return f.with(m, f(m) + (dir == Dir::Plus ? 1 : -1));
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  auto q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::map<std::int64_t, Tuple> blocks(const FinSuppFn& f, std::int64_t m) {
  if (m < 1) throw Error("block length must be positive");
  std::map<std::int64_t, Tuple> out;
  for (const auto& [i, v] : f.entries()) {
    const auto b = floor_div(i, m);
    auto& t = out[b];
    if (t.empty()) t.assign(static_cast<std::size_t>(m), 0);
    t[static_cast<std::size_t>(i - b * m)] = v;
  }
  return out;
}

std::string format(const FinSuppFn& f) {
  std::ostringstream os;
  if (f.is_zero() || *f.min_index() >= 0) {
    const auto t = to_tuple(f);
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ')';
  } else {
    os << '{';
    bool first = true;
    for (const auto& [i, v] : f.entries()) {
      os << (first ? "" : ",") << i << ':' << v;
      first = false;
    }
    os << '}';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

struct SetExpr::Node {
  Op op;
  std::int64_t m = 0;
  std::vector<SetExpr> kids;
};

namespace {

void require_positive(std::int64_t m, const char* what) {
  if (m < 1) throw Error(std::string(what) + " index must be >= 1");
}

}  // namespace

SetExpr SetExpr::zero() { return SetExpr(std::make_shared<Node>(Node{Op::Zero, 0, {}})); }
SetExpr SetExpr::succ() { return SetExpr(std::make_shared<Node>(Node{Op::Succ, 0, {}})); }

SetExpr SetExpr::box(std::int64_t m) {
  require_positive(m, "E");
  return SetExpr(std::make_shared<Node>(Node{Op::Box, m, {}}));
}

SetExpr SetExpr::iota(SetExpr l, SetExpr r) {
  return SetExpr(std::make_shared<Node>(Node{Op::Iota, 0, {std::move(l), std::move(r)}}));
}

SetExpr SetExpr::upsilon(SetExpr l, SetExpr r) {
  return SetExpr(std::make_shared<Node>(Node{Op::Upsilon, 0, {std::move(l), std::move(r)}}));
}

#define HIGMAN_UNARY(fn, tag) \
  SetExpr SetExpr::fn(SetExpr e) { return SetExpr(std::make_shared<Node>(Node{Op::tag, 0, {std::move(e)}})); }
HIGMAN_UNARY(rho, Rho)
HIGMAN_UNARY(sigma, Sigma)
HIGMAN_UNARY(tau, Tau)
HIGMAN_UNARY(theta, Theta)
HIGMAN_UNARY(zeta, Zeta)
HIGMAN_UNARY(pi, Pi)
#undef HIGMAN_UNARY

SetExpr SetExpr::omega(std::int64_t m, SetExpr e) {
  require_positive(m, "omega");
  return SetExpr(std::make_shared<Node>(Node{Op::Omega, m, {std::move(e)}}));
}

Op SetExpr::op() const { return node_->op; }
std::int64_t SetExpr::arity_param() const { return node_->m; }
const SetExpr& SetExpr::child(std::size_t i) const { return node_->kids.at(i); }
std::size_t SetExpr::num_children() const { return node_->kids.size(); }

bool operator==(const SetExpr& a, const SetExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.arity_param() != b.arity_param()) return false;
  if (a.num_children() != b.num_children()) return false;
  for (std::size_t i = 0; i < a.num_children(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

std::string to_string(const SetExpr& e) {
  switch (e.op()) {
    case Op::Zero: return "Z";
    case Op::Succ: return "S";
    case Op::Box: return "E" + std::to_string(e.arity_param());
    case Op::Iota: return "iota(" + to_string(e.child(0)) + "," + to_string(e.child(1)) + ")";
    case Op::Upsilon: return "upsilon(" + to_string(e.child(0)) + "," + to_string(e.child(1)) + ")";
    case Op::Rho: return "rho(" + to_string(e.child(0)) + ")";
    case Op::Sigma: return "sigma(" + to_string(e.child(0)) + ")";
    case Op::Tau: return "tau(" + to_string(e.child(0)) + ")";
    case Op::Theta: return "theta(" + to_string(e.child(0)) + ")";
    case Op::Zeta: return "zeta(" + to_string(e.child(0)) + ")";
    case Op::Pi: return "pi(" + to_string(e.child(0)) + ")";
    case Op::Omega: return "omega" + std::to_string(e.arity_param()) + "(" + to_string(e.child(0)) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

bool EvalBounds::fits(const FinSuppFn& f) const {
  for (const auto& [i, v] : f.entries()) {
    if (i < lo || i >= hi || v > vmax || v < -vmax) return false;
  }
  return true;
}

std::string to_string(Membership::Verdict v) {
  switch (v) {
    case Membership::Verdict::In: return "In";
    case Membership::Verdict::Out: return "Out";
    case Membership::Verdict::Unknown: return "Unknown";
  }
  return "?";
}

}  // namespace higman::efun
