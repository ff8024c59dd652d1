#include <cstdint>

#include "higman/efun.hpp"
#include "higman/error.hpp"

namespace higman::efun {

namespace {

std::uint64_t candidates(const EvalBounds& b, std::uint64_t limit) {
  const auto base = static_cast<std::uint64_t>(2 * b.vmax + 1);
  std::uint64_t n = 1;
  for (std::int64_t i = 0; i < b.width(); ++i) {
    if (n > limit / base) throw EnumerationTooLarge("candidate scan exceeds " + std::to_string(limit));
    n *= base;
  }
  return n;
}

// Candidate k: coordinate lo is the most significant digit.
FinSuppFn decode(std::uint64_t k, const EvalBounds& b) {
  const auto base = static_cast<std::uint64_t>(2 * b.vmax + 1);
  std::map<std::int64_t, std::int64_t> m;
  for (auto i = b.hi - 1; i >= b.lo; --i) {
    m[i] = static_cast<std::int64_t>(k % base) - b.vmax;
    k /= base;
  }
  return normalize(m);
}

}  // namespace

std::vector<FinSuppFn> scan_members_serial(const SetExpr& e, const EvalBounds& b, std::uint64_t limit) {
  const auto n = candidates(b, limit);
  std::vector<FinSuppFn> out;
  for (std::uint64_t k = 0; k < n; ++k) {
    auto f = decode(k, b);
    const auto v = member(f, e, b);
    if (v.is_unknown()) throw BoundTooTight(format(f) + ": " + v.reason);
    if (v.is_in()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<FinSuppFn> scan_members(const SetExpr& e, const EvalBounds& b, std::uint64_t limit) {
  const auto n = static_cast<std::int64_t>(candidates(b, limit));
  std::vector<signed char> verdict(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto v = member(decode(static_cast<std::uint64_t>(k), b), e, b);
    verdict[static_cast<std::size_t>(k)] = v.is_in() ? 1 : (v.is_unknown() ? -1 : 0);
  }
  std::vector<FinSuppFn> out;
  for (std::int64_t k = 0; k < n; ++k) {
    const auto v = verdict[static_cast<std::size_t>(k)];
    if (v < 0) {
      const auto f = decode(static_cast<std::uint64_t>(k), b);
      throw BoundTooTight(format(f) + ": " + member(f, e, b).reason);
    }
    if (v > 0) out.push_back(decode(static_cast<std::uint64_t>(k), b));
  }
  return out;
}

}  // namespace higman::efun
