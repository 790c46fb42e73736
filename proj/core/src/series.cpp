#include "wbary/series.hpp"

#include "wbary/combinatorics.hpp"

#include <stdexcept>

namespace wbary {

SparseSeries SparseSeries::constant(const BigInt& c) { return monomial(Rational(0), c); }

SparseSeries SparseSeries::monomial(const Rational& exponent, const BigInt& coefficient) {
  SparseSeries s;
  s.add_term(exponent, coefficient);
  return s;
}

void SparseSeries::add_term(const Rational& exponent, const BigInt& coefficient) {
  if (exponent < 0) throw std::invalid_argument("SparseSeries: negative exponent " + to_string(exponent));
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SparseSeries::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

SparseSeries expand_geometric_power(const BigInt& m, const Rational& bound) {
  if (bound < 0) throw std::invalid_argument("expand_geometric_power: negative bound");
  SparseSeries out;
  const std::int64_t top = to_int64(floor_rational(bound));
  for (std::int64_t n = 0; n <= top; ++n) out.add_term(Rational(n), ext_binomial(m + n - 1, n));
  return out;
}

SparseSeries multiply_truncated(const SparseSeries& a, const SparseSeries& b, const Rational& bound) {
  SparseSeries out;
  for (const auto& [ea, ca] : a.terms()) {
    if (ea > bound) break;
    for (const auto& [eb, cb] : b.terms()) {
      Rational e = ea + eb;
      if (e > bound) break;
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SeriesSpec SeriesSpec::from_instance(const ValidatedInstance& instance, std::optional<Rational> bound) {
  return SeriesSpec{instance.chi_c(), instance.weights(), instance.rho(), bound.value_or(instance.rho())};
}

SparseSeries chen_lin_series(const SeriesSpec& spec) {
  const Rational& bound = spec.truncation_bound;
  const BigInt power = BigInt(static_cast<std::int64_t>(spec.weights.size())) - spec.chi_c;
  SparseSeries g = expand_geometric_power(power, bound);
  for (const Rational& w : spec.weights) {
    SparseSeries factor = SparseSeries::constant(1);
    factor.add_term(w, -1);
    g = multiply_truncated(g, factor, bound);
  }
  if (g.coefficient(Rational(0)) != 1) {
    throw std::logic_error("chen_lin_series: constant term is not 1");
  }
  return g;
}

ChiResult chi_c_series(const SeriesSpec& spec) {
  if (spec.truncation_bound < spec.rho) {
    throw std::invalid_argument("chi_c_series: truncation bound below rho loses window terms");
  }
  const SparseSeries g = chen_lin_series(spec);
  BigInt window_sum = 0;
  for (const auto& [e, c] : g.terms()) {
    if (e > spec.rho) break;
    if (e > 0) window_sum += c;
  }
  ChiResult out;
  out.chi_c = -window_sum;
  out.degree = 1 + window_sum;
  out.method = Method::Series;
  return out;
}

ChiResult chi_c_series(const ValidatedInstance& instance) {
  return chi_c_series(SeriesSpec::from_instance(instance));
}

}  // namespace wbary
