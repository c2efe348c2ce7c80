#pragma once

#include "core/bigint.hpp"
#include "core/series.hpp"

#include <cstddef>

namespace wordeco {

// Upper summation limit of the n > m branch of the {1-12,2-21} total.
enum class SumLimit {
  Corrected,   // sum k (m)_k for k = 0..m, which agrees with brute force
  AsPrinted,   // sum k (m)_k for k = 0..m-1
};

// {1-12, 2-21}: k k! for k < n, n! for k = n, zero beyond m.
BigInt alpha_1_12__2_21(std::size_t n, std::size_t k, std::size_t m);
// C(m, k) alpha(n, k) = k (m)_k for k < n, (m)_n for k = n.
BigInt count_by_k_1_12__2_21(std::size_t n, std::size_t k, std::size_t m);
BigInt total_1_12__2_21(std::size_t n, std::size_t m, SumLimit limit = SumLimit::Corrected);

// {1-21, 2-12}: k (n-1)_{k-1}, zero beyond m.
BigInt alpha_1_21__2_12(std::size_t n, std::size_t k, std::size_t m);
BigInt count_by_k_1_21__2_12(std::size_t n, std::size_t k, std::size_t m);
BigInt total_1_21__2_12(std::size_t n, std::size_t m);

// p_n(x) = sum_k (n-1)_k x^k, the level polynomials of the arrangements tree.
Poly arrangements_level_poly(std::size_t n);

} // namespace wordeco
