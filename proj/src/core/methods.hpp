#pragma once

#include "core/bigint.hpp"
#include "core/enumerator.hpp"
#include "core/patterns.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace wordeco {

// Independent routes to |W_n^(m)(T)| and to the alpha table.
enum class Method {
  Brute,      // depth-first over {1..m}^n (alpha: filtered reduced words)
  Generate,   // sons construction, lifted by binomials
  States,     // type-(1,2) state-space dynamic programming
  Tree,       // succession rule of a known class
  Formula,    // closed form of a known class
  Gf,         // generating function of a known class
};

std::optional<Method> parse_method(std::string_view name);
std::string method_name(Method m);

struct MethodOptions {
  bool as_printed = false;   // evaluate published formulas without corrections
};

// Whether `method` covers `t` at all.
bool method_applies(const PatternSet& t, Method method);

// Throws Error(Unsupported) when the method does not cover `t`.
BigInt count_words(const PatternSet& t, std::size_t m, std::size_t n, Method method,
                   const MethodOptions& options = {});

AlphaMatrix alpha_matrix(const PatternSet& t, std::size_t n_max, std::size_t m, Method method,
                         const MethodOptions& options = {});

} // namespace wordeco
