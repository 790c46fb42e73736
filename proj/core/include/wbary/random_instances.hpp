#pragma once

// Seeded generators for the randomized cross-check corpora used by the
// tests, the acceptance suite, and `wbary selftest`.

#include "wbary/exact.hpp"
#include "wbary/oracle.hpp"
#include "wbary/space.hpp"

#include <cstdint>
#include <random>

namespace wbary {

struct InstanceCorpusConfig {
  std::int64_t chi_min = -10;
  std::int64_t chi_max = 10;
  std::size_t r_max = 8;
  std::int64_t weight_max = 2;        // weights in (0, weight_max]
  std::int64_t weight_denominator_max = 20;
  std::int64_t rho_max = 12;          // rho in (0, rho_max]
  std::int64_t rho_denominator_max = 20;
};

struct FiniteCorpusConfig {
  std::size_t m_max = 10;
  std::int64_t weight_max = 2;
  std::int64_t weight_denominator_max = 12;
};

struct FiniteCase {
  FiniteWeightedSpace space;
  Rational rho;
};

/// A uniformly drawn positive fraction p/q with q in [1, den_max] and
/// p/q in (0, max].
Rational random_fraction(std::mt19937_64& rng, std::int64_t max, std::int64_t den_max);

/// Compact connected instances. Roughly one weight in eight is set to
/// exactly 1 and some weights are copied so that equal weights and integer
/// subset sums actually occur.
ProblemInstance random_instance(std::mt19937_64& rng, const InstanceCorpusConfig& config = {});

/// Finite weighted point sets with rho in (0, m + 1]; about a third of the
/// vertices are generic (weight 1).
FiniteCase random_finite_case(std::mt19937_64& rng, const FiniteCorpusConfig& config = {});

}  // namespace wbary
