#include "wbary/combinatorics.hpp"

#include <stdexcept>

namespace wbary {

BigInt ext_binomial(const BigInt& n, std::int64_t k) {
  if (k < 0) return 0;
  // After step i the accumulator holds C(n, i+1), an integer for every n,
  // so each division is exact.
  BigInt value = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    value *= (n - i);
    value /= (i + 1);
    if (value == 0) break;
  }
  return value;
}

BigInt ext_binomial(std::int64_t n, std::int64_t k) { return ext_binomial(BigInt(n), k); }

BigInt hockey_stick_sum(const BigInt& m, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("hockey_stick_sum: n must be non-negative");
  BigInt total = 1;
  for (std::int64_t j = 1; j <= n; ++j) total += ext_binomial(m + j - 1, j);
  return total;
}

BigInt gould_convolution(const BigInt& chi1, const BigInt& chi2, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("gould_convolution: k must be non-negative");
  BigInt total = 0;
  for (std::int64_t l = 0; l <= k; ++l) {
    total += ext_binomial(BigInt(k - l) - chi1, k - l) * ext_binomial(BigInt(l - 1) - chi2, l);
  }
  return total;
}

}  // namespace wbary
