#include <doctest.h>

#include "core/eco.hpp"
#include "core/enumerator.hpp"
#include "core/error.hpp"
#include "core/formulas.hpp"

using namespace wordeco;

namespace {

PatternSet ps(const char* text) { return PatternSet::parse(text); }

// coefficient of x^(j - offset) counts the labels (j) on the level
Poly arr_level_poly(const LevelVector& level, std::uint32_t offset)
{
  std::vector<BigInt> c;
  for(const auto& [l, count] : level)
    {
      auto j = std::get<label::Arr>(l).k - offset;
      if(c.size() <= j)
        c.resize(j + 1, 0);
      c[j] += count;
    }
  return Poly(c);
}

} // namespace

TEST_CASE("{1-12,2-21} alpha")
{
  std::vector<std::vector<int>> rows = {
    {1}, {0, 1}, {0, 1, 2}, {0, 1, 4, 6}, {0, 1, 4, 18, 24}, {0, 1, 4, 18, 96, 120}};
  for(std::size_t n = 0; n < rows.size(); ++n)
    for(std::size_t k = 0; k <= 6; ++k)
      CHECK(alpha_1_12__2_21(n, k, 10) == (k < rows[n].size() ? rows[n][k] : 0));
  CHECK(alpha_1_12__2_21(5, 4, 3) == 0);

  for(std::size_t n = 2; n <= 12; ++n)
    {
      CHECK(alpha_1_12__2_21(n, n, n) == n * alpha_1_12__2_21(n - 1, n - 1, n));
      CHECK(alpha_1_12__2_21(n, n - 1, n) == (n - 1) * alpha_1_12__2_21(n - 1, n - 1, n));
      for(std::size_t k = 0; k + 1 < n - 1; ++k)
        CHECK(alpha_1_12__2_21(n, k, n) == alpha_1_12__2_21(k + 1, k, n));
    }
}

TEST_CASE("{1-12,2-21} totals")
{
  auto t = ps("1-12,2-21");
  CHECK(total_1_12__2_21(3, 2, SumLimit::AsPrinted) == 2);
  CHECK(total_1_12__2_21(3, 2) == 6);
  CHECK(brute_force_total(t, 2, 3) == 6);
  for(std::size_t m = 0; m <= 4; ++m)
    for(std::size_t n = 0; n <= 10; ++n)
      {
        CHECK(total_1_12__2_21(n, m) == brute_force_total(t, m, n));
        BigInt by_k = 0;
        for(std::size_t k = 0; k <= n; ++k)
          by_k += count_by_k_1_12__2_21(n, k, m);
        CHECK(by_k == total_1_12__2_21(n, m));
      }
  // the count no longer grows once n exceeds m
  for(std::size_t m = 1; m <= 6; ++m)
    for(std::size_t n = m + 1; n <= 12; ++n)
      CHECK(total_1_12__2_21(n, m) == total_1_12__2_21(m + 1, m));
}

TEST_CASE("{1-21,2-12} alpha and totals")
{
  std::vector<std::vector<int>> rows = {
    {1}, {0, 1}, {0, 1, 2}, {0, 1, 4, 6}, {0, 1, 6, 18, 24}, {0, 1, 8, 36, 96, 120}};
  for(std::size_t n = 0; n < rows.size(); ++n)
    for(std::size_t k = 0; k <= 6; ++k)
      CHECK(alpha_1_21__2_12(n, k, 10) == (k < rows[n].size() ? rows[n][k] : 0));
  CHECK(alpha_1_21__2_12(5, 3, 2) == 0);

  auto t = ps("1-21,2-12");
  for(std::size_t m = 0; m <= 4; ++m)
    for(std::size_t n = 0; n <= 9; ++n)
      {
        CHECK(total_1_21__2_12(n, m) == brute_force_total(t, m, n));
        BigInt by_k = 0;
        for(std::size_t k = 0; k <= n; ++k)
          by_k += count_by_k_1_21__2_12(n, k, m);
        CHECK(by_k == total_1_21__2_12(n, m));
      }
}

TEST_CASE("level polynomials of the arrangements tree")
{
  CHECK_THROWS_AS(arrangements_level_poly(0), Error);
  CHECK(arrangements_level_poly(1) == Poly{1});
  CHECK(arrangements_level_poly(3) == Poly{1, 2, 2});

  // (2); (k) -> (k) (k+1)^(k-1)
  auto base = rule_1_21__2_12();
  SuccessionRule arrangements("arrangements", label::Arr{2},
                              [&](const Label& l) { return base.produce(l, std::nullopt); });
  auto tree = levels(arrangements, std::nullopt, 11);
  auto ours = levels(base, std::nullopt, 10);
  for(std::size_t n = 1; n <= 11; ++n)
    CHECK(arr_level_poly(tree[n - 1], 2) == arrangements_level_poly(n));
  for(std::size_t n = 1; n <= 10; ++n)
    {
      auto diff = (arrangements_level_poly(n + 1) - arrangements_level_poly(n)).divided_by_x();
      CHECK(diff == arr_level_poly(ours[n - 1], 3));
      for(std::size_t k = 1; k <= n; ++k)
        CHECK(diff.coeff(k - 1) == alpha_1_21__2_12(n, k, n));
    }
}
