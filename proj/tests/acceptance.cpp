// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "artin/verify.hpp"

int main(int argc, char** argv) {
  artin::VerifyOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& name : artin::suite_names()) {
    const auto start = std::chrono::steady_clock::now();
    artin::SuiteResult r = artin::verify_suite(name, options);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %-10s %s  %d/%d checks  seed %llu  %.1fs\n", r.criterion, name.c_str(), r.ok() ? "PASS" : "FAIL", r.passed, r.passed + r.failed,
                static_cast<unsigned long long>(r.seed), secs);
    for (const auto& [k, v] : r.notes) std::printf("    %s: %s\n", k.c_str(), v.c_str());
    for (const auto& f : r.failures) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
    if (!r.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
