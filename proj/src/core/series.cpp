#include "core/series.hpp"

#include "core/error.hpp"

#include <algorithm>

namespace wordeco {

Poly::Poly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Poly::Poly(std::initializer_list<int> coefficients)
{
  for(int c : coefficients)
    coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::monomial(BigInt c, std::size_t exponent)
{
  std::vector<BigInt> coeffs(exponent + 1);
  coeffs[exponent] = std::move(c);
  return Poly(std::move(coeffs));
}

void Poly::normalize()
{
  while(!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

BigInt Poly::coeff(std::size_t exponent) const
{
  return exponent < coeffs_.size() ? coeffs_[exponent] : BigInt(0);
}

std::optional<std::size_t> Poly::degree() const noexcept
{
  if(coeffs_.empty())
    return std::nullopt;
  return coeffs_.size() - 1;
}

std::optional<std::size_t> Poly::min_degree() const noexcept
{
  for(std::size_t i = 0; i < coeffs_.size(); ++i)
    if(coeffs_[i] != 0)
      return i;
  return std::nullopt;
}

Poly& Poly::operator+=(const Poly& rhs)
{
  if(rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for(std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
  if(rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for(std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs)
{
  if(coeffs_.empty() || rhs.coeffs_.empty())
    {
      coeffs_.clear();
      return *this;
    }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for(std::size_t i = 0; i < coeffs_.size(); ++i)
    {
      if(coeffs_[i] == 0)
        continue;
      for(std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Poly Poly::scaled(const BigInt& c) const
{
  Poly out = *this;
  for(auto& v : out.coeffs_)
    v *= c;
  out.normalize();
  return out;
}

Poly Poly::shifted(std::size_t by) const
{
  if(coeffs_.empty())
    return {};
  std::vector<BigInt> out(by);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(out));
}

Poly Poly::pow(std::size_t e) const
{
  Poly result = Poly::constant(1);
  Poly base = *this;
  while(e > 0)
    {
      if(e & 1)
        result *= base;
      e >>= 1;
      if(e > 0)
        base *= base;
    }
  return result;
}

Poly Poly::divided_by_x(std::size_t by) const
{
  for(std::size_t i = 0; i < std::min(by, coeffs_.size()); ++i)
    if(coeffs_[i] != 0)
      fail(ErrorKind::InvalidArgument, "polynomial is not divisible by x^" + std::to_string(by));
  if(by >= coeffs_.size())
    return {};
  return Poly(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(by), coeffs_.end()));
}

std::string Poly::to_string() const
{
  if(coeffs_.empty())
    return "0";
  std::string out;
  for(std::size_t i = 0; i < coeffs_.size(); ++i)
    {
      const BigInt& c = coeffs_[i];
      if(c == 0)
        continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if(out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if(i == 0 || mag != 1)
        out += mag.str();
      if(i >= 1)
        out += "x";
      if(i >= 2)
        out += "^" + std::to_string(i);
    }
  return out;
}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(const Poly& p, std::size_t order) : coeffs_(order + 1)
{
  for(std::size_t i = 0; i <= order; ++i)
    coeffs_[i] = p.coeff(i);
}

const BigInt& TruncatedSeries::coeff(std::size_t n) const
{
  if(n >= coeffs_.size())
    fail(ErrorKind::InvalidArgument, "coefficient x^" + std::to_string(n) +
                                         " is beyond the truncation order " + std::to_string(order()));
  return coeffs_[n];
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
  if(rhs.order() != order())
    fail(ErrorKind::InvalidArgument, "series orders differ");
  for(std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Poly& rhs)
{
  std::vector<BigInt> out(coeffs_.size());
  const auto& p = rhs.coefficients();
  for(std::size_t i = 0; i < coeffs_.size(); ++i)
    {
      if(coeffs_[i] == 0)
        continue;
      for(std::size_t j = 0; j < p.size() && i + j < out.size(); ++j)
        out[i + j] += coeffs_[i] * p[j];
    }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries TruncatedSeries::scaled(const BigInt& c) const
{
  TruncatedSeries out = *this;
  for(auto& v : out.coeffs_)
    v *= c;
  return out;
}

TruncatedSeries& TruncatedSeries::divide(const Poly& factor)
{
  if(factor.coeff(0) != 1)
    fail(ErrorKind::InvalidArgument, "denominator factor " + factor.to_string() +
                                         " does not have constant term 1");
  const auto& f = factor.coefficients();
  for(std::size_t n = 0; n < coeffs_.size(); ++n)
    for(std::size_t i = 1; i < f.size() && i <= n; ++i)
      coeffs_[n] -= f[i] * coeffs_[n - i];
  return *this;
}

TruncatedSeries series_inverse_product(std::span<const Poly> factors, std::size_t order)
{
  TruncatedSeries out(Poly::constant(1), order);
  for(const Poly& f : factors)
    out.divide(f);
  return out;
}

BigInt falling_factorial(const BigInt& a, std::size_t b)
{
  BigInt out = 1;
  for(std::size_t i = 0; i < b; ++i)
    out *= a - i;
  return out;
}

BigInt binomial(std::size_t m, std::size_t k)
{
  if(k > m)
    return 0;
  k = std::min(k, m - k);
  BigInt out = 1;
  for(std::size_t i = 1; i <= k; ++i)
    out = out * (m - k + i) / i;
  return out;
}

BigInt factorial(std::size_t n) { return falling_factorial(BigInt(n), n); }

Poly falling_factorial_poly(std::size_t k)
{
  Poly out = Poly::constant(1);
  for(std::size_t i = 1; i <= k; ++i)
    out *= Poly({static_cast<int>(i), 1});
  return out;
}

namespace {

const Poly& one_plus_x()
{
  static const Poly p{1, 1};
  return p;
}

// 1 - i x
Poly one_minus(std::size_t i) { return Poly::constant(1) - Poly::monomial(BigInt(i), 1); }

} // namespace

Poly c_poly(std::size_t k)
{
  Poly c = Poly::constant(1);
  for(std::size_t t = 1; t <= k; ++t)
    {
      Poly step;
      for(std::size_t j = 1; j <= t; ++j)
        step += Poly::monomial(binomial(t, j), j);
      c *= step;
    }
  return c;
}

namespace {

void sum_compositions(std::size_t t, std::size_t k, std::size_t exponent, const BigInt& weight,
                      std::vector<BigInt>& out)
{
  if(t > k)
    {
      out[exponent] += weight;
      return;
    }
  // C(t, j) vanishes for j > t, so j_t ranges over 1..t
  for(std::size_t j = 1; j <= t; ++j)
    sum_compositions(t + 1, k, exponent + j, weight * binomial(t, j), out);
}

} // namespace

Poly c_poly_explicit(std::size_t k)
{
  std::vector<BigInt> coeffs(k * (k + 1) / 2 + 1);
  sum_compositions(1, k, 0, BigInt(1), coeffs);
  return Poly(std::move(coeffs));
}

Poly c_column(std::size_t k, std::size_t h)
{
  if(h < 1 || h > k)
    fail(ErrorKind::InvalidArgument, "column index h=" + std::to_string(h) +
                                         " outside 1.." + std::to_string(k));
  return (one_plus_x().pow(k - h) * c_poly(k)).shifted(1);
}

Poly f_k_1_11__1_12(std::size_t k) { return one_plus_x().pow(k) * c_poly(k); }

TruncatedSeries alpha_series_1_11__1_12(std::size_t k, std::size_t order)
{
  return TruncatedSeries(f_k_1_11__1_12(k), order);
}

namespace {

// x (1+x)^k prod_{i=0}^{k-2} ((1+x)^{k-i} - 1)
Poly summand_1_11__1_21(std::size_t k)
{
  Poly p = one_plus_x().pow(k).shifted(1);
  for(std::size_t i = 0; i + 2 <= k; ++i)
    p *= one_plus_x().pow(k - i) - Poly::constant(1);
  return p;
}

// x^k (x+k)_k / prod_{i=1}^{k-1} (1 - i x)
TruncatedSeries summand_1_11__1_22(std::size_t k, std::size_t order)
{
  TruncatedSeries s(falling_factorial_poly(k).shifted(k), order);
  for(std::size_t i = 1; i < k; ++i)
    s.divide(one_minus(i));
  return s;
}

// x^e / ((prod_{i=1}^{k-1} (1 - i x)) (1 - x))
TruncatedSeries summand_2_11__1_22(std::size_t k, std::size_t exponent, std::size_t order)
{
  TruncatedSeries s(Poly::monomial(BigInt(1), exponent), order);
  for(std::size_t i = 1; i < k; ++i)
    s.divide(one_minus(i));
  s.divide(one_minus(1));
  return s;
}

} // namespace

TruncatedSeries alpha_series_1_11__1_21(std::size_t k, std::size_t order)
{
  if(k == 0)
    return TruncatedSeries(Poly::constant(1), order);
  return TruncatedSeries(summand_1_11__1_21(k), order);
}

TruncatedSeries alpha_series_1_11__1_22(std::size_t k, std::size_t order)
{
  return summand_1_11__1_22(k, order);
}

TruncatedSeries alpha_series_2_11__1_22(std::size_t k, std::size_t order)
{
  if(k == 0)
    return TruncatedSeries(Poly::constant(1), order);
  return summand_2_11__1_22(k, k, order).scaled(factorial(k));
}

GfResult gf_total_1_11__1_12(std::size_t m, std::size_t order)
{
  GfResult out{TruncatedSeries(order), {}};
  for(std::size_t k = 0; k <= m; ++k)
    out.series += alpha_series_1_11__1_12(k, order).scaled(binomial(m, k));
  return out;
}

GfResult gf_1_11__1_21(std::size_t m, std::size_t order, SummandConvention convention)
{
  GfResult out{TruncatedSeries(order), {}};
  if(convention == SummandConvention::Calibrated)
    {
      out.series += TruncatedSeries(Poly::constant(1), order);
      out.corrections.push_back("1-11,1-21: k=0 summand x replaced by 1 (the empty word)");
    }
  else
    out.series += TruncatedSeries(summand_1_11__1_21(0), order);
  for(std::size_t k = 1; k <= m; ++k)
    out.series += TruncatedSeries(summand_1_11__1_21(k), order).scaled(binomial(m, k));
  return out;
}

GfResult gf_1_11__1_22(std::size_t m, std::size_t order, SummandConvention)
{
  // the printed k = 0 summand is already the constant 1
  GfResult out{TruncatedSeries(order), {}};
  for(std::size_t k = 0; k <= m; ++k)
    out.series += summand_1_11__1_22(k, order).scaled(binomial(m, k));
  return out;
}

GfResult gf_2_11__1_22(std::size_t m, std::size_t order, SummandConvention convention)
{
  GfResult out{TruncatedSeries(order), {}};
  if(convention == SummandConvention::Calibrated)
    {
      out.series += TruncatedSeries(Poly::constant(1), order);
      out.corrections.push_back("2-11,1-22: k=0 summand x^-1/(1-x) replaced by 1 (the empty word)");
      out.corrections.push_back("2-11,1-22: numerator x^(k-1) raised to x^k for k>=1");
      for(std::size_t k = 1; k <= m; ++k)
        out.series += summand_2_11__1_22(k, k, order).scaled(falling_factorial(BigInt(m), k));
      return out;
    }
  out.corrections.push_back("2-11,1-22: k=0 summand x^-1/(1-x) is a Laurent term and is omitted");
  for(std::size_t k = 1; k <= m; ++k)
    out.series += summand_2_11__1_22(k, k - 1, order).scaled(falling_factorial(BigInt(m), k));
  return out;
}

} // namespace wordeco
