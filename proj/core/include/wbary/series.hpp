#pragma once

// Finitely supported formal series with non-negative rational exponents and
// the Chen-Lin generating series
//
//   g(x) = (1 + x + x^2 + ...)^(r - chi_c) * prod_j (1 - x^(w_j)),
//
// whose coefficients up to x^rho give chi_c(B_rho) and the degree d_rho.

#include "wbary/euler.hpp"
#include "wbary/exact.hpp"
#include "wbary/space.hpp"

#include <map>
#include <optional>

namespace wbary {

class SparseSeries {
 public:
  using Terms = std::map<Rational, BigInt>;

  SparseSeries() = default;

  static SparseSeries constant(const BigInt& c);
  static SparseSeries monomial(const Rational& exponent, const BigInt& coefficient);

  /// Adds c x^e, merging with an existing term and erasing it if it cancels.
  void add_term(const Rational& exponent, const BigInt& coefficient);

  BigInt coefficient(const Rational& exponent) const;
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const SparseSeries&, const SparseSeries&) = default;

 private:
  Terms terms_;  // increasing exponent, no zero coefficients
};

/// (1 + x + x^2 + ...)^m truncated to exponents <= bound; any integer m.
SparseSeries expand_geometric_power(const BigInt& m, const Rational& bound);

/// Cauchy product keeping only exponents <= bound.
SparseSeries multiply_truncated(const SparseSeries& a, const SparseSeries& b, const Rational& bound);

struct SeriesSpec {
  BigInt chi_c;
  std::vector<Rational> weights;
  Rational rho;
  /// Highest exponent kept while expanding; defaults to rho.
  Rational truncation_bound;

  static SeriesSpec from_instance(const ValidatedInstance& instance,
                                  std::optional<Rational> bound = std::nullopt);
};

/// g(x) truncated at spec.truncation_bound. The constant term is always 1.
SparseSeries chen_lin_series(const SeriesSpec& spec);

/// chi_c(B_rho) = -(sum of the coefficients of g at exponents in (0, rho]).
ChiResult chi_c_series(const SeriesSpec& spec);
ChiResult chi_c_series(const ValidatedInstance& instance);

}  // namespace wbary
