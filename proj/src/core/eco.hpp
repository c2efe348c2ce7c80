#pragma once

#include "core/bigint.hpp"
#include "core/enumerator.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wordeco {

namespace label {

// word on k letters whose last letter h occurs there for the first time
struct Plain {
  std::uint32_t k, h;
  auto operator<=>(const Plain&) const = default;
};
// word on k letters whose last letter h also occurs earlier
struct Barred {
  std::uint32_t k, h;
  auto operator<=>(const Barred&) const = default;
};
// (2k+1): k letters, last letter new
struct Odd {
  std::uint32_t k;
  auto operator<=>(const Odd&) const = default;
};
// (1_k): k letters, last letter repeated
struct One {
  std::uint32_t k;
  auto operator<=>(const One&) const = default;
};
// (k): a word on k-2 letters
struct Arr {
  std::uint32_t k;
  auto operator<=>(const Arr&) const = default;
};
// (k_h), h <= k+1; h = k+1 marks a first occurrence at the end
struct Sub {
  std::uint32_t k, h;
  auto operator<=>(const Sub&) const = default;
};

} // namespace label

using Label = std::variant<label::Plain, label::Barred, label::Odd, label::One, label::Arr, label::Sub>;

// Number of distinct letters of the words a label stands for.
std::size_t letters_of(const Label& l);
std::string label_name(const Label& l);

// Column order of ECO matrices: by letter count, first-occurrence labels
// first, then h descending.
bool column_before(const Label& a, const Label& b);

// No value means no alphabet cap.
using Cap = std::optional<std::size_t>;

using Production = std::vector<std::pair<Label, std::uint64_t>>;

class SuccessionRule {
public:
  using Producer = std::function<Production(const Label&)>;

  SuccessionRule(std::string name, Label axiom, Producer produce)
    : name_(std::move(name)), axiom_(axiom), produce_(std::move(produce)) {}

  const std::string& name() const noexcept { return name_; }
  const Label& axiom() const noexcept { return axiom_; }

  // Children of `l`; any child standing for more than `cap` letters is dropped
  // together with its whole subtree.
  Production produce(const Label& l, Cap cap) const;

private:
  std::string name_;
  Label axiom_;
  Producer produce_;
};

// (3); (2k+1) -> (1_k)^k (2k+3)^(k+1); (1_k) -> (1_k)
SuccessionRule rule_1_12__2_21();
// (3); (k) -> (k) (k+1)^(k-1)
SuccessionRule rule_1_21__2_12();
// (1_2); (k_h) -> (k_1)...(k_{h-1}) ((k+1)_{k+2})^h
SuccessionRule rule_1_11__1_12();

// Unsimplified forms distinguishing first-occurrence and repeated last letters.
// (1_1); (k_h) -> (~k_1)...(~k_k) ((k+1)_1)...((k+1)_{k+1}); (~k_h) -> (~k_h)
SuccessionRule rule_1_12__2_21_detailed();
// (1_1); (k_h) as above; (~k_h) -> (~k_1)...(~k_{h-1}) ((k+1)_1)...((k+1)_h)
SuccessionRule rule_1_11__1_12_detailed();

using LevelVector = std::map<Label, BigInt>;

// levels[0] is level 1 (the axiom); levels[t] is level t+1.
std::vector<LevelVector> levels(const SuccessionRule& rule, Cap cap, std::size_t n_max);

struct EcoMatrix {
  std::vector<Label> columns;
  std::vector<std::vector<BigInt>> rows;   // rows[t] is level t+1
};

EcoMatrix eco_matrix(const SuccessionRule& rule, Cap cap, std::size_t n_max);

// Sum of level-n counts over labels standing for k-letter words; n = 0 is the
// empty word.
BigInt alpha_from_tree(const SuccessionRule& rule, Cap cap, std::size_t n, std::size_t k);

AlphaMatrix tree_alpha_table(const SuccessionRule& rule, Cap cap, std::size_t n_max);

} // namespace wordeco
