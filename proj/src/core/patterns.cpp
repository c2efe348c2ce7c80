#include "core/patterns.hpp"

#include "core/error.hpp"

#include <algorithm>

namespace wordeco {

DashedPattern::DashedPattern(std::vector<std::vector<Letter>> blocks) : blocks_(std::move(blocks))
{
  if(blocks_.empty())
    fail(ErrorKind::Parse, "pattern has no letters");
  for(const auto& block : blocks_)
    {
      if(block.empty())
        fail(ErrorKind::Parse, "pattern has an empty block");
      flat_.insert(flat_.end(), block.begin(), block.end());
    }
  if(!is_reduced(flat_))
    fail(ErrorKind::Parse, "pattern " + to_string() + " is not a reduced word");
}

DashedPattern DashedPattern::parse(std::string_view text)
{
  std::vector<std::vector<Letter>> blocks(1);
  for(char c : text)
    {
      if(c == '-')
        blocks.emplace_back();
      else if(c >= '1' && c <= '9')
        blocks.back().push_back(static_cast<Letter>(c - '0'));
      else
        fail(ErrorKind::Parse, "illegal character '" + std::string(1, c) + "' in pattern \"" +
                                   std::string(text) + "\"");
    }
  if(blocks.size() == 1 && blocks[0].size() > 1)
    {
      // no dash at all: a classical pattern, every letter may sit anywhere
      std::vector<std::vector<Letter>> singles;
      for(Letter c : blocks[0])
        singles.push_back({c});
      return DashedPattern(std::move(singles));
    }
  return DashedPattern(std::move(blocks));
}

bool DashedPattern::is_type_1_2() const noexcept
{
  return blocks_.size() == 2 && blocks_[0].size() == 1 && blocks_[1].size() == 2;
}

std::string DashedPattern::to_string() const
{
  // classical patterns print without dashes, the way they are parsed
  const bool classical = std::all_of(blocks_.begin(), blocks_.end(),
                                     [](const auto& b) { return b.size() == 1; });
  std::string out;
  if(classical)
    {
      for(Letter c : flat_)
        out += std::to_string(c);
      return out;
    }
  for(std::size_t b = 0; b < blocks_.size(); ++b)
    {
      if(b > 0)
        out += '-';
      for(Letter c : blocks_[b])
        out += std::to_string(c);
    }
  return out;
}

PatternSet::PatternSet(std::vector<DashedPattern> patterns) : patterns_(std::move(patterns))
{
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::parse(std::string_view text)
{
  std::vector<DashedPattern> out;
  while(!text.empty())
    {
      auto comma = text.find(',');
      auto piece = text.substr(0, comma);
      while(!piece.empty() && piece.front() == ' ')
        piece.remove_prefix(1);
      while(!piece.empty() && piece.back() == ' ')
        piece.remove_suffix(1);
      out.push_back(DashedPattern::parse(piece));
      if(comma == std::string_view::npos)
        break;
      text.remove_prefix(comma + 1);
      if(text.empty())
        out.push_back(DashedPattern::parse(text));   // trailing comma: reports the empty pattern
    }
  return PatternSet(std::move(out));
}

bool PatternSet::all_type_1_2() const noexcept
{
  return std::all_of(patterns_.begin(), patterns_.end(),
                     [](const DashedPattern& p) { return p.is_type_1_2(); });
}

std::string PatternSet::to_string() const
{
  std::string out;
  for(std::size_t i = 0; i < patterns_.size(); ++i)
    {
      if(i > 0)
        out += ',';
      out += patterns_[i].to_string();
    }
  return out;
}

namespace {

// Backtracking placement of blocks left to right. Each text letter is checked
// against every earlier placed letter as it is assigned, so partial
// placements that break order-isomorphism are cut immediately.
class Matcher {
public:
  Matcher(const DashedPattern& p, std::span<const Letter> w, bool anchor_last)
    : pattern_(p.letters()), blocks_(p.blocks()), text_(w), anchor_last_(anchor_last),
      positions_(p.length())
  {
    suffix_length_.assign(blocks_.size() + 1, 0);
    block_offset_.assign(blocks_.size(), 0);
    for(std::size_t b = blocks_.size(); b-- > 0;)
      suffix_length_[b] = suffix_length_[b + 1] + blocks_[b].size();
    for(std::size_t b = 1; b < blocks_.size(); ++b)
      block_offset_[b] = block_offset_[b - 1] + blocks_[b - 1].size();
  }

  bool run() { return place(0, 0); }
  const std::vector<std::size_t>& positions() const { return positions_; }

private:
  bool place(std::size_t block, std::size_t min_start)
  {
    if(block == blocks_.size())
      return true;
    const std::size_t n = text_.size();
    if(suffix_length_[block] > n || min_start > n - suffix_length_[block])
      return false;

    const std::size_t len = blocks_[block].size();
    std::size_t first = min_start;
    std::size_t last = n - suffix_length_[block];
    if(anchor_last_ && block + 1 == blocks_.size())
      first = last;

    for(std::size_t s = first; s <= last; ++s)
      if(assign(block, s) && place(block + 1, s + len))
        return true;
    return false;
  }

  bool assign(std::size_t block, std::size_t start)
  {
    const std::size_t offset = block_offset_[block];
    for(std::size_t i = 0; i < blocks_[block].size(); ++i)
      {
        const std::size_t t = offset + i;
        const Letter c = text_[start + i];
        for(std::size_t u = 0; u < t; ++u)
          if((c <=> text_[positions_[u]]) != (pattern_[t] <=> pattern_[u]))
            return false;
        positions_[t] = start + i;
      }
    return true;
  }

  std::span<const Letter> pattern_;
  const std::vector<std::vector<Letter>>& blocks_;
  std::span<const Letter> text_;
  bool anchor_last_;
  std::vector<std::size_t> positions_;
  std::vector<std::size_t> suffix_length_;
  std::vector<std::size_t> block_offset_;
};

} // namespace

std::optional<std::vector<std::size_t>> find_occurrence(const DashedPattern& p,
                                                        std::span<const Letter> w)
{
  Matcher m(p, w, false);
  if(!m.run())
    return std::nullopt;
  return m.positions();
}

bool occurs(const DashedPattern& p, std::span<const Letter> w)
{
  return Matcher(p, w, false).run();
}

bool avoids(const PatternSet& t, std::span<const Letter> w)
{
  return std::none_of(t.begin(), t.end(), [&](const DashedPattern& p) { return occurs(p, w); });
}

bool occurs_ending_at_last(const DashedPattern& p, std::span<const Letter> w)
{
  if(w.empty())
    fail(ErrorKind::InvalidArgument, "occurs_ending_at_last needs a non-empty word");
  return Matcher(p, w, true).run();
}

bool extension_avoids(const PatternSet& t, std::span<const Letter> w)
{
  return std::none_of(t.begin(), t.end(),
                      [&](const DashedPattern& p) { return occurs_ending_at_last(p, w); });
}

} // namespace wordeco
