#include "wbary/random_instances.hpp"

namespace wbary {

Rational random_fraction(std::mt19937_64& rng, std::int64_t max, std::int64_t den_max) {
  std::uniform_int_distribution<std::int64_t> den_dist(1, den_max);
  const std::int64_t den = den_dist(rng);
  std::uniform_int_distribution<std::int64_t> num_dist(1, max * den);
  return Rational(num_dist(rng), den);
}

ProblemInstance random_instance(std::mt19937_64& rng, const InstanceCorpusConfig& config) {
  std::uniform_int_distribution<std::int64_t> chi_dist(config.chi_min, config.chi_max);
  std::uniform_int_distribution<std::size_t> r_dist(0, config.r_max);
  std::uniform_int_distribution<int> flavour(0, 7);

  ProblemInstance instance;
  instance.chi_c = chi_dist(rng);
  const std::size_t r = r_dist(rng);
  for (std::size_t i = 0; i < r; ++i) {
    const int pick = flavour(rng);
    if (pick == 0) {
      instance.weights.emplace_back(1);
    } else if (pick == 1 && !instance.weights.empty()) {
      std::uniform_int_distribution<std::size_t> prev(0, instance.weights.size() - 1);
      instance.weights.push_back(instance.weights[prev(rng)]);
    } else {
      instance.weights.push_back(random_fraction(rng, config.weight_max, config.weight_denominator_max));
    }
  }
  instance.rho = random_fraction(rng, config.rho_max, config.rho_denominator_max);
  instance.space.kind = SpaceKind::Compact;
  return instance;
}

FiniteCase random_finite_case(std::mt19937_64& rng, const FiniteCorpusConfig& config) {
  std::uniform_int_distribution<std::size_t> m_dist(1, config.m_max);
  std::uniform_int_distribution<int> generic(0, 2);
  const std::size_t m = m_dist(rng);
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < m; ++i) {
    weights.push_back(generic(rng) == 0 ? Rational(1)
                                        : random_fraction(rng, config.weight_max, config.weight_denominator_max));
  }
  FiniteCase out{FiniteWeightedSpace::with_weights(m, weights), Rational(0)};
  out.rho = random_fraction(rng, static_cast<std::int64_t>(m) + 1, config.weight_denominator_max);
  return out;
}

}  // namespace wbary
