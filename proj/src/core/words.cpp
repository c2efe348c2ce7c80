#include "core/words.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <charconv>

namespace wordeco {

namespace {

void require_positive(std::span<const Letter> letters)
{
  if(std::find(letters.begin(), letters.end(), Letter{0}) != letters.end())
    fail(ErrorKind::InvalidArgument, "letters must be positive");
}

std::string_view trim(std::string_view s)
{
  while(!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while(!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

} // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters))
{
  require_positive(letters_);
}

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word Word::parse(std::string_view text)
{
  text = trim(text);
  std::vector<Letter> out;
  if(text.find(',') == std::string_view::npos)
    {
      for(char c : text)
        {
          if(c < '1' || c > '9')
            fail(ErrorKind::Parse, "invalid letter '" + std::string(1, c) + "' in word \"" +
                                       std::string(text) + "\"");
          out.push_back(static_cast<Letter>(c - '0'));
        }
      return Word(std::move(out));
    }

  while(true)
    {
      auto comma = text.find(',');
      auto piece = trim(text.substr(0, comma));
      Letter value = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if(piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size() || value == 0)
        fail(ErrorKind::Parse, "invalid letter \"" + std::string(piece) + "\" in word");
      out.push_back(value);
      if(comma == std::string_view::npos)
        break;
      text.remove_prefix(comma + 1);
    }
  return Word(std::move(out));
}

Letter Word::max_letter() const noexcept
{
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::string Word::to_string() const { return format_letters(letters_); }

std::string format_letters(std::span<const Letter> letters)
{
  bool digits = std::all_of(letters.begin(), letters.end(), [](Letter c) { return c <= 9; });
  std::string out;
  for(std::size_t i = 0; i < letters.size(); ++i)
    {
      if(!digits && i > 0)
        out += ',';
      out += std::to_string(letters[i]);
    }
  return out;
}

ReducedWord::ReducedWord(Word w) : word_(std::move(w)), span_(word_.max_letter())
{
  if(!is_reduced(word_))
    fail(ErrorKind::InvalidArgument, "word " + word_.to_string() + " is not reduced");
}

ReducedWord make_reduced_unchecked(std::vector<Letter> letters, std::size_t k)
{
  return ReducedWord(Word(std::move(letters)), k, ReducedWord::Trusted{});
}

ReducedWord reduce(std::span<const Letter> letters)
{
  std::vector<Letter> distinct(letters.begin(), letters.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<Letter> out;
  out.reserve(letters.size());
  for(Letter c : letters)
    {
      auto rank = std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin();
      out.push_back(static_cast<Letter>(rank + 1));
    }
  return ReducedWord(Word(std::move(out)), distinct.size(), ReducedWord::Trusted{});
}

bool is_reduced(std::span<const Letter> letters)
{
  std::vector<bool> seen;
  for(Letter c : letters)
    {
      if(c == 0)
        return false;
      if(c > seen.size())
        seen.resize(c, false);
      seen[c - 1] = true;
    }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool order_isomorphic(std::span<const Letter> u, std::span<const Letter> v)
{
  if(u.size() != v.size())
    return false;
  for(std::size_t a = 0; a < u.size(); ++a)
    for(std::size_t b = a + 1; b < u.size(); ++b)
      if((u[a] <=> u[b]) != (v[a] <=> v[b]))
        return false;
  return true;
}

Word embed(const ReducedWord& w, std::span<const Letter> subset)
{
  if(subset.size() != w.span())
    fail(ErrorKind::InvalidArgument, "subset has " + std::to_string(subset.size()) +
                                         " letters, word spans " + std::to_string(w.span()));
  for(std::size_t i = 0; i < subset.size(); ++i)
    if(subset[i] == 0 || (i > 0 && subset[i - 1] >= subset[i]))
      fail(ErrorKind::InvalidArgument, "subset must be strictly ascending positive letters");

  std::vector<Letter> out;
  out.reserve(w.size());
  for(Letter c : w.letters())
    out.push_back(subset[c - 1]);
  return Word(std::move(out));
}

std::vector<Word> all_embeddings(const ReducedWord& w, std::size_t m)
{
  const std::size_t k = w.span();
  if(k > m)
    fail(ErrorKind::InvalidArgument, "word spans " + std::to_string(k) +
                                         " letters but the alphabet has " + std::to_string(m));

  std::vector<Word> out;
  std::vector<Letter> subset(k);
  for(std::size_t i = 0; i < k; ++i)
    subset[i] = static_cast<Letter>(i + 1);

  while(true)
    {
      out.push_back(embed(w, subset));
      // advance to the next k-subset in lexicographic order
      std::size_t i = k;
      while(i > 0 && subset[i - 1] == m - k + i)
        --i;
      if(i == 0)
        break;
      ++subset[i - 1];
      for(std::size_t j = i; j < k; ++j)
        subset[j] = subset[j - 1] + 1;
    }
  return out;
}

} // namespace wordeco
