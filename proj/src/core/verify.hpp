#pragma once

#include "core/bigint.hpp"
#include "core/emit.hpp"
#include "core/methods.hpp"
#include "core/patterns.hpp"

#include <map>
#include <vector>

namespace wordeco {

struct VerifyCell {
  PatternSet patterns;
  std::size_t m = 0;
  std::size_t n = 0;
  std::map<Method, BigInt> values;   // every method that applies to `patterns`
  bool agree = true;
};

struct VerifyReport {
  std::vector<VerifyCell> cells;   // sorted by (patterns, m, n)

  std::size_t mismatch_count() const;
  Table to_table() const;
};

struct VerifyOptions {
  bool as_printed = false;
  bool force = false;            // lift the brute-force leaf budget
  unsigned threads = 0;          // 0: hardware concurrency
};

// Brute force refuses m^n above this many leaves unless forced.
inline constexpr std::uint64_t kBruteLeafBudget = 1'000'000'000;

// Throws Error(ResourceLimit) when the grid exceeds the brute-force budget.
void check_brute_budget(std::size_t m, std::size_t n, bool force);

// The six classes with formulas or generating functions, then the six open ones.
std::vector<PatternSet> default_verify_sets();

// Runs every applicable method on each cell (T, m, n) with 1 <= m <= m_max
// and 0 <= n <= n_max.
VerifyReport run_verify(const std::vector<PatternSet>& sets, std::size_t m_max, std::size_t n_max,
                        const VerifyOptions& options = {});

} // namespace wordeco
