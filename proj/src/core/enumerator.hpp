#pragma once

#include "core/bigint.hpp"
#include "core/patterns.hpp"
#include "core/words.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace wordeco {

// alpha(n, k): number of reduced T-avoiders of length n on exactly k
// letters. Rows 0..n_max; entries with k > n are structurally zero.
class AlphaMatrix {
public:
  explicit AlphaMatrix(std::size_t n_max = 0);

  std::size_t n_max() const noexcept { return rows_.size() - 1; }
  const BigInt& at(std::size_t n, std::size_t k) const;
  void add(std::size_t n, std::size_t k, const BigInt& value);
  void set(std::size_t n, std::size_t k, BigInt value);

  // |W_n^(m)| = sum_k C(m, k) alpha(n, k)
  BigInt lifted_total(std::size_t n, std::size_t m) const;

  bool operator==(const AlphaMatrix&) const = default;

private:
  std::vector<std::vector<BigInt>> rows_;
};

// Sons of an avoiding reduced word: append each existing letter, then (when
// the word has fewer than m letters) insert a new letter in each region r,
// renaming every letter >= r upward. Only avoiding results are kept.
// Order: existing letters ascending, then regions ascending.
std::vector<ReducedWord> sons(const ReducedWord& w, const PatternSet& t, std::size_t m);

using ReducedVisitor = std::function<void(std::span<const Letter> word, std::size_t k)>;

// Visits every reduced T-avoider of length n on at most m letters by
// iterating the sons construction from "1". n = 0 visits the empty word.
void for_each_reduced(const PatternSet& t, std::size_t n, std::size_t m, const ReducedVisitor& visit);

std::vector<ReducedWord> enumerate_reduced(const PatternSet& t, std::size_t n, std::size_t m);

// Generation-based table: one walk of the sons tree down to depth n_max.
AlphaMatrix alpha_table(const PatternSet& t, std::size_t n_max, std::size_t m);

// Filter oracle: every word over {1..min(n, m)} of length n checked with the
// full scanner, kept when reduced and avoiding. Independent of `sons`.
std::vector<ReducedWord> brute_force_reduced(const PatternSet& t, std::size_t n, std::size_t m);
AlphaMatrix brute_force_alpha(const PatternSet& t, std::size_t n_max, std::size_t m);

// |W_n^(m)(T)| by depth-first extension over {1..m} with incremental pruning.
BigInt brute_force_total(const PatternSet& t, std::size_t m, std::size_t n);

// Number of leaves a plain brute force over {1..m}^n would visit.
BigInt brute_force_leaves(std::size_t m, std::size_t n);

BigInt lifted_total(const PatternSet& t, std::size_t m, std::size_t n);

// Frontier state for type-(1,2) pattern sets: an occurrence of a-bc ending at
// the last position only involves the last two letters and one earlier
// letter, so (k, last letter, letters before the last position) suffices.
struct StateKey {
  std::uint32_t k = 0;
  std::uint32_t last = 0;
  std::uint64_t before = 0;   // bit i set <=> letter i+1 occurs before the last position

  auto operator<=>(const StateKey&) const = default;
};

// Same table as alpha_table, by dynamic programming over StateKey. Throws
// Error(Unsupported) unless every pattern is of type (1,2).
AlphaMatrix state_count(const PatternSet& t, std::size_t m, std::size_t n_max);

} // namespace wordeco
