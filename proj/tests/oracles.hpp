#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include "wbary/exact.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace wbary::testing {

/// n(n-1)...(n-k+1) / k! evaluated as an exact fraction; asserts the result
/// is integral by returning the numerator only when the denominator is 1.
inline Rational falling_factorial_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return Rational(0);
  Rational value = 1;
  for (std::int64_t i = 0; i < k; ++i) value *= Rational(n - i);
  for (std::int64_t i = 1; i <= k; ++i) value /= Rational(i);
  return value;
}

/// Dense polynomial with integer exponents, index = exponent.
using Dense = std::vector<BigInt>;

inline Dense dense_multiply(const Dense& a, const Dense& b, std::size_t max_degree) {
  Dense out(max_degree + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= max_degree; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= max_degree; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// (1 + x + ... + x^d)^m for m >= 0, or (1 - x)^{-m} for m < 0, truncated at
/// degree d, by repeated dense multiplication.
inline Dense brute_geometric_power(std::int64_t m, std::size_t d) {
  Dense result(d + 1, 0);
  result[0] = 1;
  Dense factor(d + 1, 0);
  if (m >= 0) {
    for (auto& c : factor) c = 1;
  } else {
    factor[0] = 1;
    if (d >= 1) factor[1] = -1;
  }
  const std::int64_t times = m >= 0 ? m : -m;
  for (std::int64_t t = 0; t < times; ++t) result = dense_multiply(result, factor, d);
  return result;
}

/// Counts faces of every dimension of the (k-1)-skeleton of the n-simplex by
/// walking all vertex subsets of {0..n}.
inline std::int64_t count_skeleton_faces_chi(int n, int k) {
  std::int64_t chi = 0;
  for (std::uint32_t mask = 1; mask < (1u << (n + 1)); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= k) chi += (size % 2 == 1) ? 1 : -1;
  }
  return chi;
}

/// chi_c(B_rho) evaluated straight from the alternating subset sum, with
/// binomials from the falling-factorial oracle and subsets from nested
/// recursion rather than bit masks.
inline BigInt reference_chi(std::int64_t chi_c, const std::vector<Rational>& weights, const Rational& rho) {
  const auto r = static_cast<std::int64_t>(weights.size());
  Rational sum = 0;
  auto recurse = [&](auto&& self, std::size_t next, Rational used, int size) -> void {
    if (next == weights.size()) {
      Rational remaining = rho - used;
      BigInt n = boost::multiprecision::numerator(remaining) / boost::multiprecision::denominator(remaining);
      if (remaining < 0 && Rational(n) != remaining) n -= 1;
      if (n < 0) return;
      const auto nn = static_cast<std::int64_t>(n);
      Rational term = falling_factorial_binomial(nn - chi_c + r, nn);
      sum += (size % 2 == 0) ? term : Rational(-term);
      return;
    }
    self(self, next + 1, used, size);
    self(self, next + 1, used + weights[next], size + 1);
  };
  recurse(recurse, 0, Rational(0), 0);
  Rational chi = 1 - sum;
  return boost::multiprecision::numerator(chi);
}

}  // namespace wbary::testing
