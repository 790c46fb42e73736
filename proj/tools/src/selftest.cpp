#include "selftest.hpp"

#include "wbary/error.hpp"
#include "wbary/euler.hpp"
#include "wbary/homotopy.hpp"
#include "wbary/instance_io.hpp"
#include "wbary/oracle.hpp"
#include "wbary/random_instances.hpp"
#include "wbary/series.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <thread>

namespace wbary::cli {

namespace {

struct Tally {
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& describe) {
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

using CaseFn = std::function<void(std::mt19937_64&, Tally&)>;

void engines_case(std::mt19937_64& rng, Tally& tally) {
  const auto v = validate(random_instance(rng));
  const auto d = chi_c_direct(v);
  const auto s = chi_c_strata(v);
  const auto g = chi_c_series(v);
  tally.check(d.chi_c == s.chi_c && d.chi_c == g.chi_c && d.degree == 1 - d.chi_c && g.degree == 1 - g.chi_c,
              [&] { return instance_document(v); });
}

void normalization_case(std::mt19937_64& rng, Tally& tally) {
  const auto v = validate(random_instance(rng));
  const BigInt chi = chi_c_direct(v).chi_c;
  tally.check(chi_c_direct(normalize_drop_heavy(v)).chi_c == chi &&
                  chi_c_direct(normalize_drop_unit_weights(v)).chi_c == chi,
              [&] { return instance_document(v); });
}

void oracle_case(std::mt19937_64& rng, Tally& tally) {
  const auto c = random_finite_case(rng);
  const BigInt expected = oracle_chi(c.space, c.rho);
  const auto v = validate(as_problem_instance(c.space, c.rho));
  tally.check(chi_c_direct(v).chi_c == expected && chi_c_strata(v).chi_c == expected &&
                  chi_c_series(v).chi_c == expected,
              [&] { return instance_document(v); });
}

void classifier_case(std::mt19937_64& rng, Tally& tally) {
  std::uniform_int_distribution<int> chi_dist(-5, 5), tenth(1, 10), quarter(1, 24), r_dist(1, 2);
  const int r = r_dist(rng);
  std::vector<Rational> weights;
  for (int i = 0; i < r; ++i) weights.emplace_back(tenth(rng), 10);
  const std::int64_t a1 = chi_dist(rng);
  const std::int64_t a2 = chi_dist(rng);
  const auto v = validate(ProblemInstance{a1 + a2, weights, Rational(quarter(rng), 4), {}});
  const BigInt engine = chi_c_direct(v).chi_c;
  bool ok = false;
  if (r == 1) {
    ok = chi_of_descriptor(classify_r1(v)) == engine;
  } else {
    const BigInt one_each = chi_of_descriptor(classify_r2_two_components(v, Placement::OneEach, a1, a2));
    const BigInt both = chi_of_descriptor(classify_r2_two_components(v, Placement::BothInFirst, a1, a2));
    ok = chi_of_descriptor(classify_r2_connected(v)) == engine && one_each == engine && both == engine;
  }
  tally.check(ok, [&] { return instance_document(v); });
}

CorpusResult run_corpus(const std::string& name, std::uint64_t corpus_id, const CaseFn& fn,
                        const SelftestOptions& options, unsigned workers) {
  std::vector<std::future<Tally>> shards;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = options.cases * w / workers;
    const std::size_t end = options.cases * (w + 1) / workers;
    shards.push_back(std::async(std::launch::async, [&, begin, end] {
      Tally tally;
      for (std::size_t i = begin; i < end; ++i) {
        // Seeded per case, so the corpus does not depend on the worker count.
        std::seed_seq seq{options.seed, corpus_id, static_cast<std::uint64_t>(i)};
        std::mt19937_64 rng(seq);
        try {
          fn(rng, tally);
        } catch (const std::exception& e) {
          tally.check(false, [&] { return std::string("exception: ") + e.what(); });
        }
      }
      return tally;
    }));
  }
  CorpusResult result{name, options.cases, 0, {}};
  for (auto& shard : shards) {
    Tally t = shard.get();
    if (t.failures > 0 && result.failures == 0) result.first_failure = t.first_failure;
    result.failures += t.failures;
  }
  return result;
}

}  // namespace

std::vector<CorpusResult> run_selftest(const SelftestOptions& options) {
  unsigned workers = options.workers != 0 ? options.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(options.cases, 1)));
  return {
      run_corpus("engines", 1, engines_case, options, workers),
      run_corpus("normalization", 2, normalization_case, options, workers),
      run_corpus("oracle", 3, oracle_case, options, workers),
      run_corpus("classifier", 4, classifier_case, options, workers),
  };
}

}  // namespace wbary::cli
