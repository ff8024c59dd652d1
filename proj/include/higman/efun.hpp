#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace higman::efun {

using Tuple = std::vector<std::int64_t>;

/// A function Z -> Z with finite support, stored as a sparse map with no zero
/// entries. Equality is equality of the maps.
class FinSuppFn {
 public:
  FinSuppFn() = default;

  static FinSuppFn from_tuple(const Tuple& values);

  std::int64_t operator()(std::int64_t i) const;
  const std::map<std::int64_t, std::int64_t>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::optional<std::int64_t> min_index() const;
  std::optional<std::int64_t> max_index() const;

  /// Copy with f(i) replaced by v (kept canonical).
  FinSuppFn with(std::int64_t i, std::int64_t v) const;

  friend bool operator==(const FinSuppFn&, const FinSuppFn&) = default;
  friend auto operator<=>(const FinSuppFn&, const FinSuppFn&) = default;

 private:
  friend FinSuppFn normalize(const std::map<std::int64_t, std::int64_t>& values);
  std::map<std::int64_t, std::int64_t> entries_;
};

FinSuppFn normalize(const std::map<std::int64_t, std::int64_t>& values);

/// Shortest tuple (a0,...,a_{n-1}) for f; (0) for the zero function.
/// Throws NegativeSupport when f(i) != 0 for some i < 0.
Tuple to_tuple(const FinSuppFn& f);

enum class Dir { Plus, Minus };

/// f_m^+ or f_m^-: f with f(m) moved by one.
FinSuppFn bump(const FinSuppFn& f, std::int64_t m, Dir dir);

/// Nonzero length-m blocks (f(mi), ..., f(mi+m-1)) keyed by block index i.
std::map<std::int64_t, Tuple> blocks(const FinSuppFn& f, std::int64_t m);

/// Writes f as a tuple when its support is nonnegative, otherwise as a
/// sparse map {i:v, ...}.
std::string format(const FinSuppFn& f);

// ---------------------------------------------------------------------------

enum class Op : std::uint8_t {
  Zero,     // Z  = {(0)}
  Succ,     // S  = {(a, a+1)}
  Box,      // E_m = {(a0..a_{m-1})}
  Iota,     // intersection
  Upsilon,  // union
  Rho,      // f(i) = g(-i)
  Sigma,    // f(i) = g(i-1)
  Tau,      // swap positions 0 and 1
  Theta,    // f(i) = g(2i)
  Zeta,     // f agrees with g off 0
  Pi,       // f agrees with g on i <= 0
  Omega,    // every length-m block of f lies in the child
};

/// Immutable expression tree over the atoms and the Higman operations.
class SetExpr {
 public:
  static SetExpr zero();
  static SetExpr succ();
  static SetExpr box(std::int64_t m);
  static SetExpr iota(SetExpr l, SetExpr r);
  static SetExpr upsilon(SetExpr l, SetExpr r);
  static SetExpr rho(SetExpr e);
  static SetExpr sigma(SetExpr e);
  static SetExpr tau(SetExpr e);
  static SetExpr theta(SetExpr e);
  static SetExpr zeta(SetExpr e);
  static SetExpr pi(SetExpr e);
  static SetExpr omega(std::int64_t m, SetExpr e);

  Op op() const;
  std::int64_t arity_param() const;  // m for Box and Omega, 0 otherwise
  const SetExpr& child(std::size_t i) const;
  std::size_t num_children() const;

  friend bool operator==(const SetExpr& a, const SetExpr& b);

 private:
  struct Node;
  explicit SetExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Prints in the CLI expression syntax, e.g. iota(tau(S),zeta(Z)).
std::string to_string(const SetExpr& e);

// ---------------------------------------------------------------------------

/// Window [lo, hi) on indices and a bound on absolute values.
struct EvalBounds {
  std::int64_t lo = -4;
  std::int64_t hi = 8;
  std::int64_t vmax = 9;

  bool fits(const FinSuppFn& f) const;
  std::int64_t width() const { return hi - lo; }
};

struct Membership {
  enum class Verdict { In, Out, Unknown };
  Verdict verdict = Verdict::Out;
  std::string reason;  // bound that was hit, for Unknown

  static Membership in() { return {Verdict::In, {}}; }
  static Membership out() { return {Verdict::Out, {}}; }
  static Membership unknown(std::string why) { return {Verdict::Unknown, std::move(why)}; }

  bool is_in() const { return verdict == Verdict::In; }
  bool is_out() const { return verdict == Verdict::Out; }
  bool is_unknown() const { return verdict == Verdict::Unknown; }
  friend bool operator==(const Membership& a, const Membership& b) { return a.verdict == b.verdict; }
};

std::string to_string(Membership::Verdict v);

/// Exact for atoms, iota, upsilon, rho, sigma, tau and omega. For zeta, pi
/// and theta the witness coordinates are searched inside the propagated
/// bounds; Unknown is returned only when a bound may have hidden a witness.
Membership member(const FinSuppFn& f, const SetExpr& e, const EvalBounds& b);

// ---------------------------------------------------------------------------

/// A finite set of functions fitting a window, stored as a union of boxes.
/// Each box coordinate is either a fixed value or "any value in [-V, V]".
class FunctionSet {
 public:
  using Box = std::vector<std::optional<std::int64_t>>;

  FunctionSet(EvalBounds bounds, std::vector<Box> boxes);

  const EvalBounds& bounds() const { return bounds_; }
  const std::vector<Box>& boxes() const { return boxes_; }

  bool empty() const { return boxes_.empty(); }
  bool contains(const FinSuppFn& f) const;
  bool subset_of(const FunctionSet& other) const;
  bool equals(const FunctionSet& other) const;

  /// Number of distinct functions.
  std::uint64_t size() const;

  /// Explicit members in lexicographic order of their window values.
  /// Throws EnumerationTooLarge above `limit` elements.
  std::vector<FinSuppFn> expand(std::uint64_t limit = 1'000'000) const;

  /// Set built from explicit functions (must fit the bounds).
  static FunctionSet of(EvalBounds bounds, const std::vector<FinSuppFn>& fns);

 private:
  EvalBounds bounds_;
  std::vector<Box> boxes_;
};

/// Exactly the functions fitting `b` that belong to e, computed by a
/// constraint-propagating witness search rather than a candidate scan.
/// Throws BoundTooTight when some candidate would evaluate Unknown.
FunctionSet enumerate(const SetExpr& e, const EvalBounds& b);

/// enumerate(...).expand(limit)
std::vector<FinSuppFn> enumerate_list(const SetExpr& e, const EvalBounds& b,
                                      std::uint64_t limit = 1'000'000);

/// Calls member() on every function fitting b, in the order of expand().
/// Throws BoundTooTight if some candidate is Unknown and EnumerationTooLarge
/// above `limit` candidates.
std::vector<FinSuppFn> scan_members(const SetExpr& e, const EvalBounds& b, std::uint64_t limit = 50'000'000);
std::vector<FinSuppFn> scan_members_serial(const SetExpr& e, const EvalBounds& b,
                                           std::uint64_t limit = 50'000'000);

}  // namespace higman::efun
