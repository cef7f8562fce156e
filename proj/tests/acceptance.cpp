#include "fano/acceptance.hpp"

#include <iomanip>
#include <iostream>

int main() {
  bool all = true;
  for (const auto& r : fano::run_acceptance()) {
    all = all && r.pass;
    std::cout << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (" << std::fixed
              << std::setprecision(2) << r.seconds << " s): " << r.detail << std::endl;
  }
  return all ? 0 : 1;
}
