#include "wbary/oracle.hpp"

#include "wbary/combinatorics.hpp"
#include "wbary/error.hpp"

#include <bit>

namespace wbary {

FiniteWeightedSpace FiniteWeightedSpace::with_weights(std::size_t m, std::span<const Rational> listed) {
  if (m == 0) throw Error(ErrorCode::ParseError, "a finite space needs at least one vertex");
  if (m > kMaxOracleVertices) {
    throw Error(ErrorCode::TooManyVertices, std::to_string(m) + " vertices exceed the cap of " +
                                                std::to_string(kMaxOracleVertices));
  }
  if (listed.size() > m) {
    throw Error(ErrorCode::ParseError, std::to_string(listed.size()) + " weights listed for " +
                                           std::to_string(m) + " vertices");
  }
  FiniteWeightedSpace space;
  space.vertex_weights.assign(m, Rational(1));
  for (std::size_t i = 0; i < listed.size(); ++i) {
    if (listed[i] <= 0) {
      throw Error(ErrorCode::NonPositiveWeight, "vertex " + std::to_string(i + 1) + " has weight " +
                                                    to_string(listed[i]));
    }
    space.vertex_weights[i] = listed[i];
  }
  return space;
}

BigInt oracle_chi(const FiniteWeightedSpace& space, const Rational& rho) {
  const std::size_t m = space.vertex_count();
  if (m > kMaxOracleVertices) {
    throw Error(ErrorCode::TooManyVertices, std::to_string(m) + " vertices exceed the cap of " +
                                                std::to_string(kMaxOracleVertices));
  }
  std::int64_t chi = 0;
  const std::uint64_t faces = std::uint64_t{1} << m;
  for (std::uint64_t mask = 1; mask < faces; ++mask) {
    Rational weight = 0;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      weight += space.vertex_weights[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    if (weight <= rho) chi += (std::popcount(mask) % 2 == 1) ? 1 : -1;
  }
  return chi;
}

ProblemInstance as_problem_instance(const FiniteWeightedSpace& space, const Rational& rho) {
  ProblemInstance instance;
  instance.chi_c = static_cast<std::int64_t>(space.vertex_count());
  for (const Rational& w : space.vertex_weights) {
    if (w != 1) instance.weights.push_back(w);
  }
  instance.rho = rho;
  instance.space.kind = SpaceKind::Compact;
  return instance;
}

BigInt skeleton_chi(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 1 || k > n + 1) {
    throw Error(ErrorCode::OutOfScope, "skeleton_chi needs 1 <= k <= n+1");
  }
  // i-dimensional faces of the n-simplex: C(n+1, i+1).
  BigInt chi = 0;
  for (std::int64_t i = 0; i < k; ++i) {
    BigInt faces = ext_binomial(n + 1, i + 1);
    chi += (i % 2 == 0) ? faces : BigInt(-faces);
  }
  return chi;
}

}  // namespace wbary
