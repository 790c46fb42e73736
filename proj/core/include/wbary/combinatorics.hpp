#pragma once

#include "wbary/exact.hpp"

#include <cstdint>

namespace wbary {

/// Binomial coefficient extended to every integer upper argument: the value
/// of the polynomial n(n-1)...(n-k+1)/k! at n. Zero for k < 0, one for k = 0.
BigInt ext_binomial(const BigInt& n, std::int64_t k);
BigInt ext_binomial(std::int64_t n, std::int64_t k);

/// 1 + sum_{j=1..n} C(m+j-1, j), summed term by term. Equals C(m+n, n) for
/// every integer m. Requires n >= 0.
BigInt hockey_stick_sum(const BigInt& m, std::int64_t n);

/// sum_{l=0..k} C(k-l-chi1, k-l) C(l-1-chi2, l), summed term by term. Equals
/// C(k-chi1-chi2, k). Requires k >= 0.
BigInt gould_convolution(const BigInt& chi1, const BigInt& chi2, std::int64_t k);

}  // namespace wbary
