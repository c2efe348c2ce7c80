#include <doctest.h>

#include "core/error.hpp"
#include "core/patterns.hpp"
#include "oracle.hpp"

#include <random>

using namespace wordeco;

namespace {

Word w(const char* text) { return Word::parse(text); }
DashedPattern pat(const char* text) { return DashedPattern::parse(text); }

oracle::Blocks blocks_of(const DashedPattern& p)
{
  oracle::Blocks out;
  for(const auto& b : p.blocks())
    out.emplace_back(b.begin(), b.end());
  return out;
}

// every a-bc with abc a reduced word over {1,2,3}
std::vector<DashedPattern> all_type_1_2()
{
  std::vector<DashedPattern> out;
  for(Letter a = 1; a <= 3; ++a)
    for(Letter b = 1; b <= 3; ++b)
      for(Letter c = 1; c <= 3; ++c)
        if(is_reduced(std::vector<Letter>{a, b, c}))
          out.push_back(DashedPattern({{a}, {b, c}}));
  return out;
}

std::vector<DashedPattern> sample_patterns()
{
  auto out = all_type_1_2();
  for(const char* text : {"121", "212", "12-3", "1-2-1", "11", "1", "21-1", "1-1"})
    out.push_back(pat(text));
  out.push_back(DashedPattern({{1, 2, 1}}));
  out.push_back(DashedPattern({{2, 1}, {1}}));
  return out;
}

} // namespace

TEST_CASE("parse_pattern")
{
  auto p = pat("1-12");
  CHECK(p.blocks() == std::vector<std::vector<Letter>>{{1}, {1, 2}});
  CHECK(pat("2-21").blocks() == std::vector<std::vector<Letter>>{{2}, {2, 1}});
  CHECK(p.is_type_1_2());
  CHECK(p.to_string() == "1-12");

  // dash-free text is a classical pattern
  CHECK(pat("121").blocks() == std::vector<std::vector<Letter>>{{1}, {2}, {1}});
  CHECK(pat("121") == pat("1-2-1"));
  CHECK(pat("1-2-1").to_string() == "121");
  CHECK_FALSE(pat("121").is_type_1_2());

  CHECK_THROWS_AS(pat("1--12"), Error);
  CHECK_THROWS_AS(pat("-12"), Error);
  CHECK_THROWS_AS(pat("1-13"), Error);
  CHECK_THROWS_AS(pat("1-1x"), Error);
  CHECK_THROWS_AS(pat(""), Error);
}

TEST_CASE("pattern sets drop duplicates and sort")
{
  auto t = PatternSet::parse("2-21,1-12,2-21");
  CHECK(t.size() == 2);
  CHECK(t.to_string() == "1-12,2-21");
  CHECK(PatternSet::parse("").empty());
  CHECK(PatternSet::parse("2-11,1-22") == PatternSet::parse("1-22,2-11"));
  CHECK_THROWS_AS(PatternSet::parse("1-12,"), Error);
}

TEST_CASE("occurs: published examples")
{
  CHECK(occurs(pat("121"), w("311472511")));
  CHECK_FALSE(occurs(pat("212"), w("311472511")));
  CHECK_FALSE(occurs(pat("221"), w("311472511")));
  CHECK(occurs(pat("321"), w("41325")));
  CHECK_FALSE(occurs(pat("32-1"), w("41325")));
}

TEST_CASE("single block of distinct letters is consecutive containment")
{
  DashedPattern consecutive({{3, 2, 1}});
  // 41325 has no three adjacent decreasing letters
  CHECK_FALSE(occurs(consecutive, w("41325")));
  CHECK(occurs(consecutive, w("543")));
  for(const char* text : {"41325", "54123", "13254", "32154"})
    {
      auto word = w(text);
      bool window = false;
      for(std::size_t i = 0; i + 3 <= word.size(); ++i)
        window = window || (word[i] > word[i + 1] && word[i + 1] > word[i + 2]);
      CHECK(occurs(consecutive, word) == window);
    }
}

TEST_CASE("witness positions")
{
  auto found = find_occurrence(pat("1-12"), w("112").letters());
  REQUIRE(found);
  CHECK(*found == std::vector<std::size_t>{0, 1, 2});
  CHECK_FALSE(find_occurrence(pat("212"), w("311472511").letters()));

  auto witness = find_occurrence(pat("32-1"), w("4312").letters());
  REQUIRE(witness);
  CHECK((*witness)[1] == (*witness)[0] + 1);
}

TEST_CASE("avoids")
{
  auto t = PatternSet::parse("1-12,2-21");
  CHECK(avoids(t, w("121")));
  CHECK_FALSE(avoids(t, w("112")));
  CHECK(avoids(PatternSet{}, w("311472511")));

  // the eight words of {1,2}^3
  int avoiding = 0;
  oracle::for_each_word(2, 3, [&](const oracle::Letters& x) {
    avoiding += avoids(t, std::vector<Letter>(x.begin(), x.end())) ? 1 : 0;
  });
  CHECK(avoiding == 6);
}

TEST_CASE("occurs_ending_at_last")
{
  CHECK(occurs_ending_at_last(pat("1-12"), w("112")));
  CHECK(occurs(pat("1-12"), w("1121")));
  CHECK_FALSE(occurs_ending_at_last(pat("1-12"), w("1121")));
  CHECK_FALSE(occurs_ending_at_last(pat("1-12"), w("1")));
  CHECK_FALSE(occurs_ending_at_last(pat("121"), w("3")));
  CHECK(occurs_ending_at_last(pat("1"), w("3")));
  CHECK_THROWS_AS(occurs_ending_at_last(pat("1-12"), w("")), Error);
}

TEST_CASE("occurs agrees with the index-tuple oracle")
{
  for(const auto& p : sample_patterns())
    {
      auto blocks = blocks_of(p);
      for(std::size_t n = 0; n <= 6; ++n)
        oracle::for_each_word(3, n, [&](const oracle::Letters& x) {
          std::vector<Letter> word(x.begin(), x.end());
          CHECK(occurs(p, word) == oracle::contains(blocks, x));
          if(auto found = find_occurrence(p, word))
            {
              std::vector<Letter> picked;
              for(auto i : *found)
                picked.push_back(word[i]);
              CHECK(order_isomorphic(picked, p.letters()));
            }
        });
    }
}

TEST_CASE("incremental check is complete")
{
  // avoids(T, wc) <=> avoids(T, w) and no occurrence ends at the last letter,
  // exhaustively for n <= 7 over 4 letters
  for(const auto& p : sample_patterns())
    {
      PatternSet t({p});
      for(std::size_t n = 1; n <= 7; ++n)
        oracle::for_each_word(4, n, [&](const oracle::Letters& x) {
          std::vector<Letter> word(x.begin(), x.end());
          std::span<const Letter> prefix(word.data(), n - 1);
          bool incremental = avoids(t, prefix) && extension_avoids(t, word);
          if(incremental != avoids(t, word))
            FAIL("pattern " << p.to_string() << " word " << format_letters(word));
        });
    }
}

TEST_CASE("prefix hereditarity and order-isomorphism invariance")
{
  std::mt19937 rng(2024);
  auto patterns = sample_patterns();
  for(int trial = 0; trial < 3000; ++trial)
    {
      const auto& p = patterns[trial % patterns.size()];
      auto x = oracle::random_word(rng, 1 + trial % 5, trial % 11);
      std::vector<Letter> word(x.begin(), x.end());
      bool before = occurs(p, word);
      word.push_back(1 + trial % 6);
      if(before)
        CHECK(occurs(p, word));
      CHECK(occurs(p, word) == occurs(p, reduce(word).word()));
    }
}
