#include "core/formulas.hpp"

#include "core/error.hpp"

#include <algorithm>

namespace wordeco {

BigInt alpha_1_12__2_21(std::size_t n, std::size_t k, std::size_t m)
{
  if(n == 0)
    return k == 0 ? 1 : 0;
  if(k == 0 || k > n || k > m)
    return 0;
  if(k < n)
    return k * factorial(k);
  return factorial(n);
}

BigInt count_by_k_1_12__2_21(std::size_t n, std::size_t k, std::size_t m)
{
  if(k > n || k > m)
    return 0;
  if(k == n)
    return falling_factorial(BigInt(m), n);
  return k * falling_factorial(BigInt(m), k);
}

BigInt total_1_12__2_21(std::size_t n, std::size_t m, SumLimit limit)
{
  BigInt total = 0;
  if(n <= m)
    {
      for(std::size_t k = 0; k < n; ++k)
        total += k * falling_factorial(BigInt(m), k);
      return total + falling_factorial(BigInt(m), n);
    }
  const std::size_t last = limit == SumLimit::Corrected ? m : m - 1;
  for(std::size_t k = 0; k <= last; ++k)
    total += k * falling_factorial(BigInt(m), k);
  return total;
}

BigInt alpha_1_21__2_12(std::size_t n, std::size_t k, std::size_t m)
{
  if(n == 0)
    return k == 0 ? 1 : 0;
  if(k == 0 || k > n || k > m)
    return 0;
  return k * falling_factorial(BigInt(n - 1), k - 1);
}

BigInt count_by_k_1_21__2_12(std::size_t n, std::size_t k, std::size_t m)
{
  return binomial(m, k) * alpha_1_21__2_12(n, k, m);
}

BigInt total_1_21__2_12(std::size_t n, std::size_t m)
{
  if(n == 0)
    return 1;
  BigInt total = 0;
  for(std::size_t k = 1; k <= std::min(n, m); ++k)
    total += binomial(m, k) * k * falling_factorial(BigInt(n - 1), k - 1);
  return total;
}

Poly arrangements_level_poly(std::size_t n)
{
  if(n == 0)
    fail(ErrorKind::InvalidArgument, "level polynomials start at n = 1");
  std::vector<BigInt> coeffs;
  for(std::size_t k = 0; k <= n - 1; ++k)
    coeffs.push_back(falling_factorial(BigInt(n - 1), k));
  return Poly(std::move(coeffs));
}

} // namespace wordeco
