// Acceptance gate: runs every verification suite and prints one line per
// criterion. Exit status is nonzero when any criterion fails.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "sublat/suites.hpp"

int main(int argc, char** argv) {
  int threads = 4;
  if (argc > 1) {
    threads = std::atoi(argv[1]);
    if (threads < 1) {
      std::fprintf(stderr, "usage: %s [threads]\n", argv[0]);
      return 2;
    }
  }

  std::vector<std::string> names = sublat::suite_names();
  int                      failed = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    sublat::SuiteReport rep = sublat::run_suite(names[i], threads);
    int checks = static_cast<int>(rep.checks.size());
    std::printf("AC-%zu %s: %s (%d checks, %.2fs)\n", i + 1, rep.name.c_str(),
                rep.passed() ? "pass" : "FAIL", checks, rep.seconds);
    if (!rep.passed()) {
      ++failed;
      for (sublat::SuiteCheck const& c : rep.checks) {
        if (c.status != sublat::CheckStatus::pass) {
          std::printf("  %s %s: %s\n", to_string(c.status), c.id.c_str(),
                      c.witness.c_str());
        }
      }
    }
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", names.size() - failed,
              names.size());
  return failed == 0 ? 0 : 1;
}
