#pragma once

// Brute-force ground truth on finite spaces. For a finite discrete X the
// barycenter space B(X) is the full simplex on the points of X, and B_rho
// is the subcomplex of faces whose total vertex weight is at most rho.

#include "wbary/exact.hpp"
#include "wbary/space.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wbary {

inline constexpr std::size_t kMaxOracleVertices = 22;

struct FiniteWeightedSpace {
  /// One weight per vertex; 1 for non-singular vertices.
  std::vector<Rational> vertex_weights;

  std::size_t vertex_count() const noexcept { return vertex_weights.size(); }

  /// m vertices; the first listed.size() carry the listed weights, the rest
  /// weight 1. Throws on m = 0, m above the cap, too many listed weights,
  /// or a non-positive weight.
  static FiniteWeightedSpace with_weights(std::size_t m, std::span<const Rational> listed);
};

/// Euler characteristic of the weight-bounded subcomplex of the simplex, by
/// enumerating every nonempty vertex subset. Throws Error(TooManyVertices).
BigInt oracle_chi(const FiniteWeightedSpace& space, const Rational& rho);

/// The same space as an engine input: chi_c = m (a finite set is compact),
/// singular weights = the vertex weights different from 1.
ProblemInstance as_problem_instance(const FiniteWeightedSpace& space, const Rational& rho);

/// Euler characteristic of the (k-1)-skeleton of the n-simplex, which is
/// B_k of a set with n+1 points, counted face by face. Requires 1 <= k <= n+1.
BigInt skeleton_chi(std::int64_t n, std::int64_t k);

}  // namespace wbary
