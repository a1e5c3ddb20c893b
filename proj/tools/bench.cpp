// Compares the serial reference kernels against the OpenMP path across the
// heavier suites and prints a timing table.

#include <chrono>
#include <cstdio>

#include "clw/harness.hpp"

int main(int argc, char** argv) {
  using namespace clw;
  long long count = argc > 1 ? std::atoll(argv[1]) : 300;

  GenSpec hints;
  hints.seed = 7;
  hints.count = count;

  const char* suites[] = {"semantics-equivalence", "sam-equivalence",
                          "representation-roundtrip", "unravel-equivalence",
                          "final-determination"};

  std::printf("%-28s %12s %12s %8s\n", "suite", "serial ms", "openmp ms", "speedup");
  for (const char* name : suites) {
    SuiteReport serial = run_suite(name, hints, ExecMode::Serial);
    SuiteReport parallel = run_suite(name, hints, ExecMode::Parallel);
    if (!serial.all_pass() || !parallel.all_pass()) {
      std::printf("%-28s FAILED\n", name);
      return 1;
    }
    std::printf("%-28s %12.1f %12.1f %7.2fx\n", name, serial.millis, parallel.millis,
                serial.millis / parallel.millis);
  }
  return 0;
}
