#include "mcpp/verify.hpp"

#include <iostream>

// One line per acceptance criterion; nonzero exit if any fails.
int main() {
  bool all = true;
  for (const auto& r : mcpp::run_verification_suite()) {
    std::cout << "criterion " << r.id << " (" << r.name << "): " << (r.pass ? "PASS" : "FAIL");
    if (!r.detail.empty()) std::cout << " — " << r.detail;
    std::cout << std::endl;
    all &= r.pass;
  }
  return all ? 0 : 1;
}
