#pragma once

#include "core/eco.hpp"
#include "core/patterns.hpp"
#include "core/series.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wordeco {

// The pattern pairs that have a succession rule, a closed formula or a
// generating function.
enum class KnownClass {
  c1_12__2_21,
  c1_21__2_12,
  c1_11__1_12,
  c1_11__1_21,
  c1_11__1_22,
  c2_11__1_22,
};

std::span<const KnownClass> known_classes();

// Pattern sets with no closed form; countable only by the generic engines.
std::vector<PatternSet> open_classes();

std::optional<KnownClass> classify(const PatternSet& t);
std::string class_id(KnownClass c);
PatternSet class_patterns(KnownClass c);

// Accepts any order of the two patterns, e.g. "1-22,2-11".
KnownClass parse_class(std::string_view text);

std::optional<SuccessionRule> rule_for(KnownClass c, bool detailed = false);
bool has_formula(KnownClass c);
bool has_gf(KnownClass c);

GfResult class_gf(KnownClass c, std::size_t m, std::size_t order,
                  SummandConvention convention = SummandConvention::Calibrated);

// x^n coefficient is alpha(n, k); requires has_gf(c).
TruncatedSeries class_alpha_series(KnownClass c, std::size_t k, std::size_t order);

} // namespace wordeco
