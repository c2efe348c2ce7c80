#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordeco {

using Letter = std::uint32_t;

// A finite sequence of positive letters. The alphabet size is never stored;
// callers pass it alongside.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  // Accepts "41776" (one digit per letter) or "1,10,3". The empty string is
  // the empty word.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter max_letter() const noexcept;

  // Digit form when every letter is <= 9, comma-separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Word&) const = default;

private:
  std::vector<Letter> letters_;
};

// A word whose letter set is exactly {1..k}.
class ReducedWord {
public:
  ReducedWord() = default;
  // Throws Error(InvalidArgument) when `w` is not reduced.
  explicit ReducedWord(Word w);

  const Word& word() const noexcept { return word_; }
  std::span<const Letter> letters() const noexcept { return word_.letters(); }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  std::size_t span() const noexcept { return span_; }
  std::string to_string() const { return word_.to_string(); }

  auto operator<=>(const ReducedWord& other) const { return word_ <=> other.word_; }
  bool operator==(const ReducedWord& other) const { return word_ == other.word_; }

private:
  struct Trusted {};
  ReducedWord(Word w, std::size_t k, Trusted) : word_(std::move(w)), span_(k) {}
  friend ReducedWord reduce(std::span<const Letter> letters);
  friend ReducedWord make_reduced_unchecked(std::vector<Letter> letters, std::size_t k);

  Word word_;
  std::size_t span_ = 0;
};

std::string format_letters(std::span<const Letter> letters);

ReducedWord reduce(std::span<const Letter> letters);
inline ReducedWord reduce(const Word& w) { return reduce(w.letters()); }

// Internal fast path for generators that already maintain the invariant.
ReducedWord make_reduced_unchecked(std::vector<Letter> letters, std::size_t k);

bool is_reduced(std::span<const Letter> letters);
inline bool is_reduced(const Word& w) { return is_reduced(w.letters()); }

bool order_isomorphic(std::span<const Letter> u, std::span<const Letter> v);
inline bool order_isomorphic(const Word& u, const Word& v)
{
  return order_isomorphic(u.letters(), v.letters());
}

// Letter i of the result is subset[w[i] - 1].
Word embed(const ReducedWord& w, std::span<const Letter> subset);

// The C(m, k) relabellings of `w` onto k-subsets of {1..m}, in lexicographic
// order of the subsets.
std::vector<Word> all_embeddings(const ReducedWord& w, std::size_t m);

} // namespace wordeco
