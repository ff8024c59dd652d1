#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace higman::verify {

inline constexpr std::uint64_t kDefaultSeed = 0xB16A;

struct CaseReport {
  std::string id;
  std::string claim;
  std::string location;
  std::string inputs;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::vector<std::string> trace;
  std::uint64_t seed = kDefaultSeed;
};

std::vector<std::string> case_ids();

/// Throws UnknownCase. Never throws for a failing check; errors raised by
/// the check itself become a failing report.
CaseReport run_case(const std::string& id, std::uint64_t seed = kDefaultSeed);

/// Catalog order; cases run on OpenMP threads.
std::vector<CaseReport> run_all(std::uint64_t seed = kDefaultSeed);
std::vector<CaseReport> run_all_serial(std::uint64_t seed = kDefaultSeed);

std::string to_text(const std::vector<CaseReport>& reports);
std::string to_json(const std::vector<CaseReport>& reports);

}  // namespace higman::verify
