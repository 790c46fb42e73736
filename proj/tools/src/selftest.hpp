#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wbary::cli {

struct SelftestOptions {
  std::size_t cases = 1000;
  std::uint64_t seed = 0;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct CorpusResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // instance document of some failing case
};

/// Runs the randomized cross-check corpora, sharded across worker threads.
/// Every case is seeded from (seed, corpus, case index), so results depend
/// only on the seed and the case count.
std::vector<CorpusResult> run_selftest(const SelftestOptions& options);

}  // namespace wbary::cli
