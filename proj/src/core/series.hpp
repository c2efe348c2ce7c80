#pragma once

#include "core/bigint.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wordeco {

// Dense polynomial with exact integer coefficients; index = exponent.
// Trailing zeros are always stripped, so the zero polynomial is empty.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coefficients);
  Poly(std::initializer_list<int> coefficients);

  static Poly monomial(BigInt c, std::size_t exponent);
  static Poly constant(BigInt c) { return monomial(std::move(c), 0); }

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t exponent) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  std::optional<std::size_t> min_degree() const noexcept;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }

  Poly scaled(const BigInt& c) const;
  Poly shifted(std::size_t by) const;      // times x^by
  Poly pow(std::size_t e) const;

  // Exact division by x^by; throws when a dropped coefficient is non-zero.
  Poly divided_by_x(std::size_t by = 1) const;

  std::string to_string() const;

  bool operator==(const Poly&) const = default;

private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

inline Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }
inline Poly poly_scale(const Poly& a, const BigInt& c) { return a.scaled(c); }
inline Poly poly_shift(const Poly& a, std::size_t by) { return a.shifted(by); }

// Power series known up to and including x^order.
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order);
  TruncatedSeries(const Poly& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const BigInt& coeff(std::size_t n) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Poly& rhs);
  TruncatedSeries scaled(const BigInt& c) const;

  // In-place division by a polynomial with constant term 1.
  TruncatedSeries& divide(const Poly& factor);

  bool operator==(const TruncatedSeries&) const = default;

private:
  std::vector<BigInt> coeffs_;
};

// Expansion of prod_i 1/factors[i] up to x^order. Each factor must have
// constant term 1.
TruncatedSeries series_inverse_product(std::span<const Poly> factors, std::size_t order);

// (a)_b = a (a-1) ... (a-b+1), with (a)_0 = 1.
BigInt falling_factorial(const BigInt& a, std::size_t b);
BigInt binomial(std::size_t m, std::size_t k);
BigInt factorial(std::size_t n);

// (x+k)(x+k-1)...(x+1)
Poly falling_factorial_poly(std::size_t k);

// Generating function of the special column k_{k+1} of the ECO matrix for
// {1-11, 1-12}: C_0 = 1, C_k = (sum_{j=1..k} C(k,j) x^j) C_{k-1}.
Poly c_poly(std::size_t k);

// Same polynomial summed directly over compositions j_1 + ... + j_k = i with
// 1 <= j_t <= t, weight prod_t C(t, j_t).
Poly c_poly_explicit(std::size_t k);

// Column k_h, 1 <= h <= k: x (1+x)^(k-h) C_k.
Poly c_column(std::size_t k, std::size_t h);

// f_k = (1+x)^k C_k: reduced {1-11,1-12}-avoiders on k letters by length.
Poly f_k_1_11__1_12(std::size_t k);

enum class SummandConvention {
  Calibrated,   // low-k summands adjusted so the x^0 term counts the empty word
  AsPrinted,
};

struct GfResult {
  TruncatedSeries series;
  std::vector<std::string> corrections;   // one entry per adjustment that fired
};

GfResult gf_total_1_11__1_12(std::size_t m, std::size_t order);
GfResult gf_1_11__1_21(std::size_t m, std::size_t order,
                       SummandConvention convention = SummandConvention::Calibrated);
GfResult gf_1_11__1_22(std::size_t m, std::size_t order,
                       SummandConvention convention = SummandConvention::Calibrated);
GfResult gf_2_11__1_22(std::size_t m, std::size_t order,
                       SummandConvention convention = SummandConvention::Calibrated);

// Per-letter-count series whose x^n coefficient is alpha(n, k) for the
// corresponding class (calibrated summands divided by C(m, k)).
TruncatedSeries alpha_series_1_11__1_12(std::size_t k, std::size_t order);
TruncatedSeries alpha_series_1_11__1_21(std::size_t k, std::size_t order);
TruncatedSeries alpha_series_1_11__1_22(std::size_t k, std::size_t order);
TruncatedSeries alpha_series_2_11__1_22(std::size_t k, std::size_t order);

} // namespace wordeco
