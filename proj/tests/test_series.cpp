#include <doctest.h>

#include "core/eco.hpp"
#include "core/enumerator.hpp"
#include "core/error.hpp"
#include "core/series.hpp"

using namespace wordeco;

namespace {

PatternSet ps(const char* text) { return PatternSet::parse(text); }

void check_prefix(const TruncatedSeries& s, const std::vector<int>& expected)
{
  for(std::size_t n = 0; n < expected.size(); ++n)
    CHECK_MESSAGE(s.coeff(n) == expected[n], "n=" << n);
}

} // namespace

TEST_CASE("poly ring operations")
{
  Poly a{1, 1};         // 1 + x
  Poly b{0, 2, 0, 1};   // 2x + x^3
  CHECK(a + b == Poly{1, 3, 0, 1});
  CHECK(a - a == Poly{});
  CHECK(a * a == Poly{1, 2, 1});
  CHECK(a.pow(3) == Poly{1, 3, 3, 1});
  CHECK(a.pow(0) == Poly{1});
  CHECK(b.scaled(3) == Poly{0, 6, 0, 3});
  CHECK(a.shifted(2) == Poly{0, 0, 1, 1});
  CHECK(b.divided_by_x() == Poly{2, 0, 1});
  CHECK_THROWS_AS(a.divided_by_x(), Error);
  CHECK(Poly{0, 0, 0}.is_zero());
  CHECK_FALSE(Poly{}.degree());
  CHECK(*b.degree() == 3);
  CHECK(*b.min_degree() == 1);
  CHECK(b.coeff(10) == 0);
  CHECK(poly_mul(a, b) == a * b);
  CHECK(poly_add(a, b) == a + b);
  CHECK(poly_shift(a, 1) == a.shifted(1));
  CHECK(poly_scale(a, 0).is_zero());
  CHECK(Poly{1, -2, 0, 1}.to_string() == "1 - 2x + x^3");
  CHECK(Poly{}.to_string() == "0");
}

TEST_CASE("truncated series")
{
  std::vector<Poly> factors = {Poly{1, -1}, Poly{1, -2}};
  auto s = series_inverse_product(factors, 12);
  for(std::size_t n = 0; n <= 12; ++n)
    CHECK(s.coeff(n) == (BigInt(1) << (n + 1)) - 1);
  CHECK_THROWS_AS(s.coeff(13), Error);

  TruncatedSeries t(Poly{1, 1}, 5);
  t.divide(Poly{1, 1});
  check_prefix(t, {1, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(t.divide(Poly{2, 1}), Error);
  t *= Poly{0, 0, 0, 0, 0, 0, 1};   // beyond the order
  check_prefix(t, {0, 0, 0, 0, 0, 0});
}

TEST_CASE("combinatorial helpers")
{
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(3, 5) == 0);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 10) == 0);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(factorial(25) == BigInt("15511210043330985984000000"));
  CHECK(falling_factorial_poly(2) == Poly{2, 3, 1});
  CHECK(falling_factorial_poly(0) == Poly{1});
}

TEST_CASE("column polynomials")
{
  CHECK(c_poly(0) == Poly{1});
  CHECK(c_poly(1) == Poly{0, 1});
  CHECK(c_poly(2) == Poly{0, 0, 2, 1});
  for(std::size_t k = 0; k <= 8; ++k)
    {
      auto c = c_poly(k);
      CHECK(c == c_poly_explicit(k));
      CHECK(*c.degree() == k * (k + 1) / 2);
      CHECK(*c.min_degree() == k);
      // leading coefficient: product of C(t, t) = 1; lowest: k!
      CHECK(c.coeff(k * (k + 1) / 2) == 1);
      CHECK(c.coeff(k) == factorial(k));
    }
  CHECK_THROWS_AS(c_column(3, 0), Error);
  CHECK_THROWS_AS(c_column(3, 4), Error);
}

TEST_CASE("column polynomials match the ECO matrix")
{
  const std::size_t depth = 9;
  auto eco = eco_matrix(rule_1_11__1_12(), std::nullopt, depth);
  for(std::size_t j = 0; j < eco.columns.size(); ++j)
    {
      auto sub = std::get<label::Sub>(eco.columns[j]);
      Poly column = sub.h == sub.k + 1 ? c_poly(sub.k) : c_column(sub.k, sub.h);
      for(std::size_t t = 0; t < depth; ++t)
        CHECK_MESSAGE(eco.rows[t][j] == column.coeff(t + 1), label_name(eco.columns[j]) << " level " << t + 1);
    }
}

TEST_CASE("f_k counts reduced words by length")
{
  auto table = state_count(ps("1-11,1-12"), 12, 12);
  for(std::size_t k = 0; k <= 5; ++k)
    {
      auto f = f_k_1_11__1_12(k);
      CHECK(f == Poly{1, 1}.pow(k) * c_poly(k));
      for(std::size_t n = 0; n <= 12; ++n)
        CHECK(f.coeff(n) == table.at(n, k));
    }
}

TEST_CASE("generating functions against frozen counts")
{
  check_prefix(gf_1_11__1_21(3, 7).series, {1, 3, 9, 21, 39, 53, 49, 27});
  check_prefix(gf_1_11__1_21(2, 7).series, {1, 2, 4, 5, 4, 1, 0, 0});
  check_prefix(gf_1_11__1_22(3, 7).series, {1, 3, 9, 21, 47, 99, 204, 414});
  check_prefix(gf_1_11__1_22(2, 7).series, {1, 2, 4, 5, 6, 6, 6, 6});
  check_prefix(gf_2_11__1_22(3, 7).series, {1, 3, 9, 21, 45, 93, 189, 381});
  check_prefix(gf_2_11__1_22(2, 7).series, {1, 2, 4, 6, 8, 10, 12, 14});
  CHECK(gf_1_11__1_22(3, 7).corrections.empty());
  CHECK(gf_1_11__1_21(3, 7).corrections.size() == 1);
}

TEST_CASE("generating functions against brute force")
{
  struct Case { const char* set; GfResult (*gf)(std::size_t, std::size_t, SummandConvention); };
  std::vector<Case> cases = {{"1-11,1-21", gf_1_11__1_21},
                             {"1-11,1-22", gf_1_11__1_22},
                             {"2-11,1-22", gf_2_11__1_22}};
  for(const auto& c : cases)
    for(std::size_t m = 0; m <= 4; ++m)
      {
        auto s = c.gf(m, 8, SummandConvention::Calibrated).series;
        for(std::size_t n = 0; n <= 8; ++n)
          CHECK_MESSAGE(s.coeff(n) == brute_force_total(ps(c.set), m, n), c.set << " m=" << m << " n=" << n);
      }
  for(std::size_t m = 0; m <= 4; ++m)
    {
      auto s = gf_total_1_11__1_12(m, 9).series;
      for(std::size_t n = 0; n <= 9; ++n)
        CHECK(s.coeff(n) == brute_force_total(ps("1-11,1-12"), m, n));
    }
}

TEST_CASE("printed summands differ only where calibrated")
{
  for(std::size_t m = 1; m <= 4; ++m)
    {
      auto printed = gf_1_11__1_21(m, 8, SummandConvention::AsPrinted).series;
      auto calibrated = gf_1_11__1_21(m, 8).series;
      CHECK(printed.coeff(0) == 0);
      CHECK(printed.coeff(1) == calibrated.coeff(1) + 1);
      for(std::size_t n = 2; n <= 8; ++n)
        CHECK(printed.coeff(n) == calibrated.coeff(n));

      // the printed {2-11,1-22} sum is the calibrated one shifted down by x
      auto shifted = gf_2_11__1_22(m, 8, SummandConvention::AsPrinted).series;
      auto fixed = gf_2_11__1_22(m, 8).series;
      CHECK(fixed.coeff(0) == 1);
      for(std::size_t n = 1; n <= 8; ++n)
        CHECK(fixed.coeff(n) == shifted.coeff(n - 1));

      CHECK(gf_1_11__1_22(m, 8, SummandConvention::AsPrinted).series == gf_1_11__1_22(m, 8).series);
    }
}

TEST_CASE("per-k series give the alpha table")
{
  struct Case { const char* set; TruncatedSeries (*series)(std::size_t, std::size_t); };
  std::vector<Case> cases = {{"1-11,1-12", alpha_series_1_11__1_12},
                             {"1-11,1-21", alpha_series_1_11__1_21},
                             {"1-11,1-22", alpha_series_1_11__1_22},
                             {"2-11,1-22", alpha_series_2_11__1_22}};
  for(const auto& c : cases)
    {
      auto table = state_count(ps(c.set), 8, 8);
      for(std::size_t k = 0; k <= 8; ++k)
        {
          auto s = c.series(k, 8);
          for(std::size_t n = 0; n <= 8; ++n)
            CHECK_MESSAGE(s.coeff(n) == table.at(n, k), c.set << " n=" << n << " k=" << k);
        }
    }
}
