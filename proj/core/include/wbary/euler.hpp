#pragma once

// Compactly supported Euler characteristic of weighted barycenter spaces.
//
// Two of the three independent evaluations live here: the closed-form
// alternating sum over subsets of singular points (chi_c_direct), and the
// sum over the locally closed strata of the space (chi_c_strata). The
// generating-series evaluation is in series.hpp.

#include "wbary/exact.hpp"
#include "wbary/space.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace wbary {

enum class Method { Direct, Strata, Series };

std::string_view to_string(Method method) noexcept;

/// A signed contribution attributed to one subset of singular points.
struct SubsetTerm {
  std::uint64_t mask = 0;
  BigInt value;
};

struct ChiResult {
  BigInt chi_c;
  Method method = Method::Direct;
  /// Direct: the signed binomial terms, chi_c = 1 - sum. Strata: the chi_c of
  /// each nonempty stratum, chi_c = sum. Series: empty.
  std::vector<SubsetTerm> terms;
  /// Leray-Schauder degree, always 1 - chi_c.
  BigInt degree;
};

ChiResult chi_c_direct(const ValidatedInstance& instance);
ChiResult chi_c_strata(const ValidatedInstance& instance);

/// Drops every singular point heavier than rho; such points never occur in a
/// configuration, so X is replaced by X minus those points.
ValidatedInstance normalize_drop_heavy(const ValidatedInstance& instance);

/// Drops every singular point of weight exactly 1; it is indistinguishable
/// from a generic point.
ValidatedInstance normalize_drop_unit_weights(const ValidatedInstance& instance);

/// True when the computed chi_c is also the ordinary Euler characteristic:
/// all weights <= 1 and X compact, the interior of an even dimensional
/// manifold with boundary, or a union of such components.
bool topological_chi_applicable(const ValidatedInstance& instance);

/// chi_c(X - Q_r) = chi_c(X) - r.
BigInt chi_c_complement(const BigInt& chi_c, std::int64_t r);

struct JoinFactor {
  BigInt chi_c;
  bool is_compact = true;
};

/// chi_c of the join X * Y.
BigInt chi_join(const JoinFactor& x, const JoinFactor& y);

/// chi_c of the k-fold suspension S^k * X.
BigInt chi_suspension(const BigInt& chi_c, std::int64_t k);

/// Euler characteristic of Xbar / (boundary u Q_r) for a disconnected X,
/// assembled summand by summand as a wedge of component quotients and
/// circles plus the untouched compact components. Checked internally against
/// the closed form chi_c(X) - r + 1. Throws Error(InconsistentComponents).
BigInt chi_quotient_wedge(std::span<const ComponentSpec> components, std::size_t r);

}  // namespace wbary
