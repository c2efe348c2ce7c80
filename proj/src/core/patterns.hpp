#pragma once

#include "core/words.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordeco {

// A reduced word split into adjacency blocks: letters inside a block must
// occupy consecutive positions of the text, a dash between blocks allows any
// gap. "1-12" has blocks [1] and [1,2].
//
// Text without any dash is a classical pattern: "121" parses as 1-2-1, every
// letter its own block. A single multi-letter block (fully consecutive
// pattern) can only be built through the constructor and has no text form of
// its own; to_string() prints it as bare digits.
class DashedPattern {
public:
  explicit DashedPattern(std::vector<std::vector<Letter>> blocks);

  static DashedPattern parse(std::string_view text);

  const std::vector<std::vector<Letter>>& blocks() const noexcept { return blocks_; }
  std::span<const Letter> letters() const noexcept { return flat_; }
  std::size_t length() const noexcept { return flat_.size(); }

  // Shape a-bc: one free letter, then an adjacent pair.
  bool is_type_1_2() const noexcept;

  std::string to_string() const;

  bool operator==(const DashedPattern& other) const { return blocks_ == other.blocks_; }
  auto operator<=>(const DashedPattern& other) const { return blocks_ <=> other.blocks_; }

private:
  std::vector<std::vector<Letter>> blocks_;
  std::vector<Letter> flat_;
};

// Sorted, duplicate-free collection of patterns.
class PatternSet {
public:
  PatternSet() = default;
  explicit PatternSet(std::vector<DashedPattern> patterns);

  // Comma-separated patterns; the empty string is the empty set.
  static PatternSet parse(std::string_view text);

  auto begin() const noexcept { return patterns_.begin(); }
  auto end() const noexcept { return patterns_.end(); }
  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  const DashedPattern& operator[](std::size_t i) const { return patterns_[i]; }

  bool all_type_1_2() const noexcept;
  std::string to_string() const;

  bool operator==(const PatternSet&) const = default;
  auto operator<=>(const PatternSet&) const = default;

private:
  std::vector<DashedPattern> patterns_;
};

// 0-based text positions of the first occurrence found, pattern letter order.
std::optional<std::vector<std::size_t>> find_occurrence(const DashedPattern& p,
                                                        std::span<const Letter> w);

bool occurs(const DashedPattern& p, std::span<const Letter> w);
inline bool occurs(const DashedPattern& p, const Word& w) { return occurs(p, w.letters()); }

bool avoids(const PatternSet& t, std::span<const Letter> w);
inline bool avoids(const PatternSet& t, const Word& w) { return avoids(t, w.letters()); }

// True iff some occurrence places the last letter of its last block on the
// final position of `w`. Throws on the empty word.
bool occurs_ending_at_last(const DashedPattern& p, std::span<const Letter> w);
inline bool occurs_ending_at_last(const DashedPattern& p, const Word& w)
{
  return occurs_ending_at_last(p, w.letters());
}

// For a word whose proper prefix avoids `t`: the whole word avoids `t`.
bool extension_avoids(const PatternSet& t, std::span<const Letter> w);

} // namespace wordeco
