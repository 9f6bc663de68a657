#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kltan/rootsys.hpp"

namespace kltan::verify {

struct Failure {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct VerifyOutcome {
  std::string suite;
  long long cases = 0;
  std::vector<Failure> failures;
  double seconds = 0;

  bool ok() const noexcept { return failures.empty(); }
};

struct VerifyOptions {
  // Groups up to this order are covered exhaustively (every x, every
  // reduced word of x, every w <= x); larger groups are sampled.
  std::uint64_t exhaustive_order = 48;
  int samples = 1000;
  int max_sample_length = 12;
  std::uint64_t seed = 20240601;
  // Failures kept per suite; the count in `cases` is not affected.
  std::size_t max_reported_failures = 20;
};

// Runs every suite that applies to the root system. Suites run concurrently;
// the result is ordered by suite name.
std::vector<VerifyOutcome> run_battery(const RootSystem& rs, const VerifyOptions& options = {});

}  // namespace kltan::verify
