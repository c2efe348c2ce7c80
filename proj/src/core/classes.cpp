#include "core/classes.hpp"

#include "core/error.hpp"

#include <array>

namespace wordeco {

namespace {

constexpr std::array kKnown{
  KnownClass::c1_12__2_21, KnownClass::c1_21__2_12, KnownClass::c1_11__1_12,
  KnownClass::c1_11__1_21, KnownClass::c1_11__1_22, KnownClass::c2_11__1_22,
};

} // namespace

std::span<const KnownClass> known_classes() { return kKnown; }

std::vector<PatternSet> open_classes()
{
  std::vector<PatternSet> out;
  for(const char* text : {"1-12,1-21", "1-12,1-22", "1-12,2-11", "1-12,2-12", "1-21,1-22", "1-21,2-11"})
    out.push_back(PatternSet::parse(text));
  return out;
}

std::string class_id(KnownClass c)
{
  switch(c)
    {
    case KnownClass::c1_12__2_21: return "1-12,2-21";
    case KnownClass::c1_21__2_12: return "1-21,2-12";
    case KnownClass::c1_11__1_12: return "1-11,1-12";
    case KnownClass::c1_11__1_21: return "1-11,1-21";
    case KnownClass::c1_11__1_22: return "1-11,1-22";
    case KnownClass::c2_11__1_22: return "2-11,1-22";
    }
  fail(ErrorKind::InvalidArgument, "unknown class");
}

PatternSet class_patterns(KnownClass c) { return PatternSet::parse(class_id(c)); }

std::optional<KnownClass> classify(const PatternSet& t)
{
  for(auto c : kKnown)
    if(class_patterns(c) == t)
      return c;
  return std::nullopt;
}

KnownClass parse_class(std::string_view text)
{
  auto c = classify(PatternSet::parse(text));
  if(!c)
    fail(ErrorKind::Unsupported, "no succession rule, formula or generating function for \"" +
                                     std::string(text) + "\"");
  return *c;
}

std::optional<SuccessionRule> rule_for(KnownClass c, bool detailed)
{
  switch(c)
    {
    case KnownClass::c1_12__2_21: return detailed ? rule_1_12__2_21_detailed() : rule_1_12__2_21();
    case KnownClass::c1_21__2_12:
      if(detailed)
        return std::nullopt;
      return rule_1_21__2_12();
    case KnownClass::c1_11__1_12: return detailed ? rule_1_11__1_12_detailed() : rule_1_11__1_12();
    default: return std::nullopt;
    }
}

bool has_formula(KnownClass c)
{
  return c == KnownClass::c1_12__2_21 || c == KnownClass::c1_21__2_12;
}

bool has_gf(KnownClass c) { return !has_formula(c); }

GfResult class_gf(KnownClass c, std::size_t m, std::size_t order, SummandConvention convention)
{
  switch(c)
    {
    case KnownClass::c1_11__1_12: return gf_total_1_11__1_12(m, order);
    case KnownClass::c1_11__1_21: return gf_1_11__1_21(m, order, convention);
    case KnownClass::c1_11__1_22: return gf_1_11__1_22(m, order, convention);
    case KnownClass::c2_11__1_22: return gf_2_11__1_22(m, order, convention);
    default:
      fail(ErrorKind::Unsupported, "no generating function for class " + class_id(c));
    }
}

TruncatedSeries class_alpha_series(KnownClass c, std::size_t k, std::size_t order)
{
  switch(c)
    {
    case KnownClass::c1_11__1_12: return alpha_series_1_11__1_12(k, order);
    case KnownClass::c1_11__1_21: return alpha_series_1_11__1_21(k, order);
    case KnownClass::c1_11__1_22: return alpha_series_1_11__1_22(k, order);
    case KnownClass::c2_11__1_22: return alpha_series_2_11__1_22(k, order);
    default:
      fail(ErrorKind::Unsupported, "no generating function for class " + class_id(c));
    }
}

} // namespace wordeco
