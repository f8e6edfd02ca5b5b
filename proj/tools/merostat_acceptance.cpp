// Runs the acceptance suite and prints one PASS/FAIL line per criterion.
// Exit status is 0 only when every criterion passes.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "merostat/acceptance/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  const auto results = merostat::acceptance::run_acceptance(only);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << merostat::acceptance::format_line(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (results.size() - static_cast<size_t>(failed)) << "/" << results.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
