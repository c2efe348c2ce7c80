#include "core/methods.hpp"

#include "core/classes.hpp"
#include "core/eco.hpp"
#include "core/error.hpp"
#include "core/formulas.hpp"

#include <algorithm>
#include <array>

namespace wordeco {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 6> kNames{{
  {Method::Brute, "brute"},
  {Method::Generate, "generate"},
  {Method::States, "states"},
  {Method::Tree, "tree"},
  {Method::Formula, "formula"},
  {Method::Gf, "gf"},
}};

KnownClass require_class(const PatternSet& t, Method method)
{
  auto c = classify(t);
  bool ok = c.has_value();
  if(ok && method == Method::Tree)
    ok = rule_for(*c).has_value();
  if(ok && method == Method::Formula)
    ok = has_formula(*c);
  if(ok && method == Method::Gf)
    ok = has_gf(*c);
  if(!ok)
    fail(ErrorKind::Unsupported, "method " + method_name(method) + " does not cover {" +
                                     t.to_string() + "}");
  return *c;
}

} // namespace

std::optional<Method> parse_method(std::string_view name)
{
  for(const auto& [m, n] : kNames)
    if(n == name)
      return m;
  return std::nullopt;
}

std::string method_name(Method m)
{
  for(const auto& [method, n] : kNames)
    if(method == m)
      return std::string(n);
  return "?";
}

bool method_applies(const PatternSet& t, Method method)
{
  switch(method)
    {
    case Method::Brute:
    case Method::Generate: return true;
    case Method::States: return t.all_type_1_2();
    default: break;
    }
  auto c = classify(t);
  if(!c)
    return false;
  if(method == Method::Tree)
    return rule_for(*c).has_value();
  if(method == Method::Formula)
    return has_formula(*c);
  return has_gf(*c);
}

BigInt count_words(const PatternSet& t, std::size_t m, std::size_t n, Method method,
                   const MethodOptions& options)
{
  switch(method)
    {
    case Method::Brute: return brute_force_total(t, m, n);
    case Method::Generate: return lifted_total(t, m, n);
    case Method::States: return state_count(t, m, n).lifted_total(n, m);
    case Method::Tree:
      {
        auto c = require_class(t, method);
        return tree_alpha_table(*rule_for(c), m, n).lifted_total(n, m);
      }
    case Method::Formula:
      {
        auto c = require_class(t, method);
        if(c == KnownClass::c1_12__2_21)
          return total_1_12__2_21(n, m, options.as_printed ? SumLimit::AsPrinted : SumLimit::Corrected);
        return total_1_21__2_12(n, m);
      }
    case Method::Gf:
      {
        auto c = require_class(t, method);
        auto convention = options.as_printed ? SummandConvention::AsPrinted : SummandConvention::Calibrated;
        return class_gf(c, m, n, convention).series.coeff(n);
      }
    }
  fail(ErrorKind::InvalidArgument, "unknown method");
}

AlphaMatrix alpha_matrix(const PatternSet& t, std::size_t n_max, std::size_t m, Method method,
                         const MethodOptions&)
{
  switch(method)
    {
    case Method::Brute: return brute_force_alpha(t, n_max, m);
    case Method::Generate: return alpha_table(t, n_max, m);
    case Method::States: return state_count(t, m, n_max);
    case Method::Tree: return tree_alpha_table(*rule_for(require_class(t, method)), m, n_max);
    case Method::Formula:
      {
        auto c = require_class(t, method);
        AlphaMatrix alpha(n_max);
        for(std::size_t n = 0; n <= n_max; ++n)
          for(std::size_t k = 0; k <= n; ++k)
            alpha.set(n, k, c == KnownClass::c1_12__2_21 ? alpha_1_12__2_21(n, k, m)
                                                         : alpha_1_21__2_12(n, k, m));
        return alpha;
      }
    case Method::Gf:
      {
        auto c = require_class(t, method);
        AlphaMatrix alpha(n_max);
        for(std::size_t k = 0; k <= std::min(n_max, m); ++k)
          {
            auto s = class_alpha_series(c, k, n_max);
            for(std::size_t n = 0; n < k; ++n)
              if(s.coeff(n) != 0)
                fail(ErrorKind::InvalidArgument, "series for k=" + std::to_string(k) +
                                                     " is non-zero below x^k");
            for(std::size_t n = k; n <= n_max; ++n)
              alpha.set(n, k, s.coeff(n));
          }
        return alpha;
      }
    }
  fail(ErrorKind::InvalidArgument, "unknown method");
}

} // namespace wordeco
