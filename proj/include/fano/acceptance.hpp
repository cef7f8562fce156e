#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fano {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::size_t property_cases = 500;
  std::uint64_t seed = 0x5eed2024;
  int threads_a = 1, threads_b = 3;  // determinism check
};

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace fano
