// Acceptance gate: runs the numbered criteria and prints one line per
// criterion. With no argument all criteria run; with an index only that one.
// Exit code 0 iff everything requested passed.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "permorder/checks.hpp"

int main(int argc, char** argv) {
  std::vector<int> wanted;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) {
      const int k = std::atoi(argv[i]);
      if (k < 1 || k > permorder::checks::criterion_count()) {
        std::cerr << "error: criterion index must be in 1.." << permorder::checks::criterion_count()
                  << "\n";
        return 2;
      }
      wanted.push_back(k);
    }
  } else {
    for (int k = 1; k <= permorder::checks::criterion_count(); ++k) wanted.push_back(k);
  }

  bool all_pass = true;
  for (int k : wanted) {
    const auto result = permorder::checks::run_criterion(k);
    all_pass = all_pass && result.pass;
    std::cout << "criterion " << result.index << " " << (result.pass ? "PASS" : "FAIL") << " ("
              << result.seconds << "s) " << result.name;
    if (!result.detail.empty()) std::cout << " -- " << result.detail;
    std::cout << std::endl;
  }
  return all_pass ? 0 : 1;
}
