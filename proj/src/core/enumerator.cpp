#include "core/enumerator.hpp"

#include "core/error.hpp"
#include "core/series.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace wordeco {

AlphaMatrix::AlphaMatrix(std::size_t n_max) : rows_(n_max + 1)
{
  for(std::size_t n = 0; n <= n_max; ++n)
    rows_[n].assign(n + 1, BigInt(0));
}

const BigInt& AlphaMatrix::at(std::size_t n, std::size_t k) const
{
  static const BigInt zero = 0;
  if(n >= rows_.size() || k > n)
    return zero;
  return rows_[n][k];
}

void AlphaMatrix::add(std::size_t n, std::size_t k, const BigInt& value)
{
  if(n >= rows_.size() || k > n)
    fail(ErrorKind::InvalidArgument, "alpha entry out of range");
  rows_[n][k] += value;
}

void AlphaMatrix::set(std::size_t n, std::size_t k, BigInt value)
{
  if(n >= rows_.size() || k > n)
    fail(ErrorKind::InvalidArgument, "alpha entry out of range");
  rows_[n][k] = std::move(value);
}

BigInt AlphaMatrix::lifted_total(std::size_t n, std::size_t m) const
{
  BigInt total = 0;
  for(std::size_t k = 0; k <= std::min(n, m); ++k)
    total += binomial(m, k) * at(n, k);
  return total;
}

namespace {

// Calls visit(k') for every son of `buf` (a reduced avoider on k letters);
// `buf` holds the son during the call and is restored afterwards.
template<class Visit>
void visit_sons(std::vector<Letter>& buf, std::size_t k, const PatternSet& t, std::size_t m,
                Visit&& visit)
{
  for(Letter c = 1; c <= k; ++c)
    {
      buf.push_back(c);
      if(extension_avoids(t, buf))
        visit(k);
      buf.pop_back();
    }
  if(k >= m)
    return;
  for(Letter r = 1; r <= k + 1; ++r)
    {
      for(auto& c : buf)
        if(c >= r)
          ++c;
      buf.push_back(r);
      if(extension_avoids(t, buf))
        visit(k + 1);
      buf.pop_back();
      for(auto& c : buf)
        if(c > r)
          --c;
    }
}

template<class Leaf>
void walk(std::vector<Letter>& buf, std::size_t k, std::size_t n, const PatternSet& t,
          std::size_t m, Leaf& leaf)
{
  leaf(buf, k);
  if(buf.size() == n)
    return;
  visit_sons(buf, k, t, m, [&](std::size_t k2) { walk(buf, k2, n, t, m, leaf); });
}

} // namespace

std::vector<ReducedWord> sons(const ReducedWord& w, const PatternSet& t, std::size_t m)
{
  if(w.empty())
    fail(ErrorKind::InvalidArgument, "sons of the empty word are not defined");
  if(w.span() > m)
    fail(ErrorKind::InvalidArgument, "word " + w.to_string() + " uses more than m=" +
                                         std::to_string(m) + " letters");
  if(!avoids(t, w.letters()))
    fail(ErrorKind::InvalidArgument, "word " + w.to_string() + " does not avoid " + t.to_string());

  std::vector<ReducedWord> out;
  std::vector<Letter> buf(w.letters().begin(), w.letters().end());
  visit_sons(buf, w.span(), t, m,
             [&](std::size_t k) { out.push_back(make_reduced_unchecked(buf, k)); });
  return out;
}

void for_each_reduced(const PatternSet& t, std::size_t n, std::size_t m, const ReducedVisitor& visit)
{
  if(n == 0)
    {
      visit({}, 0);
      return;
    }
  if(m == 0)
    return;
  std::vector<Letter> buf{1};
  if(!avoids(t, buf))
    return;
  auto leaf = [&](const std::vector<Letter>& w, std::size_t k) {
    if(w.size() == n)
      visit(w, k);
  };
  walk(buf, 1, n, t, m, leaf);
}

std::vector<ReducedWord> enumerate_reduced(const PatternSet& t, std::size_t n, std::size_t m)
{
  std::vector<ReducedWord> out;
  for_each_reduced(t, n, m, [&](std::span<const Letter> w, std::size_t k) {
    out.push_back(make_reduced_unchecked(std::vector<Letter>(w.begin(), w.end()), k));
  });
  return out;
}

AlphaMatrix alpha_table(const PatternSet& t, std::size_t n_max, std::size_t m)
{
  AlphaMatrix alpha(n_max);
  alpha.set(0, 0, 1);
  if(n_max == 0 || m == 0)
    return alpha;

  std::vector<Letter> buf{1};
  if(!avoids(t, buf))
    return alpha;

  // counts[n][k], kept in machine words while walking
  std::vector<std::vector<std::uint64_t>> counts(n_max + 1, std::vector<std::uint64_t>(n_max + 1));
  auto leaf = [&](const std::vector<Letter>& w, std::size_t k) { ++counts[w.size()][k]; };
  walk(buf, 1, n_max, t, m, leaf);

  for(std::size_t n = 1; n <= n_max; ++n)
    for(std::size_t k = 1; k <= n; ++k)
      alpha.set(n, k, counts[n][k]);
  return alpha;
}

namespace {

// Depth-first over words whose letters lie in 1..letters; every prefix is
// re-checked with the full scanner.
template<class Leaf>
void filter_walk(std::vector<Letter>& buf, std::size_t n, std::size_t letters, const PatternSet& t,
                 Leaf& leaf)
{
  if(buf.size() == n)
    {
      leaf(buf);
      return;
    }
  for(Letter c = 1; c <= letters; ++c)
    {
      buf.push_back(c);
      if(avoids(t, buf))
        filter_walk(buf, n, letters, t, leaf);
      buf.pop_back();
    }
}

} // namespace

std::vector<ReducedWord> brute_force_reduced(const PatternSet& t, std::size_t n, std::size_t m)
{
  std::vector<ReducedWord> out;
  std::vector<Letter> buf;
  auto leaf = [&](const std::vector<Letter>& w) {
    if(is_reduced(w))
      out.push_back(ReducedWord(Word(w)));
  };
  filter_walk(buf, n, std::min(n, m), t, leaf);
  return out;
}

AlphaMatrix brute_force_alpha(const PatternSet& t, std::size_t n_max, std::size_t m)
{
  AlphaMatrix alpha(n_max);
  for(std::size_t n = 0; n <= n_max; ++n)
    for(const auto& w : brute_force_reduced(t, n, m))
      alpha.add(n, w.span(), 1);
  return alpha;
}

namespace {

std::uint64_t count_extensions(std::vector<Letter>& buf, std::size_t n, std::size_t m,
                               const PatternSet& t)
{
  if(buf.size() == n)
    return 1;
  std::uint64_t total = 0;
  for(Letter c = 1; c <= m; ++c)
    {
      buf.push_back(c);
      if(extension_avoids(t, buf))
        total += count_extensions(buf, n, m, t);
      buf.pop_back();
    }
  return total;
}

} // namespace

BigInt brute_force_total(const PatternSet& t, std::size_t m, std::size_t n)
{
  if(n == 0)
    return 1;

  // one task per first letter; partial counts are summed
  std::vector<std::future<std::uint64_t>> branches;
  for(Letter c = 1; c <= m; ++c)
    branches.push_back(std::async(n >= 8 ? std::launch::async : std::launch::deferred, [&, c] {
      std::vector<Letter> buf{c};
      if(!extension_avoids(t, buf))
        return std::uint64_t{0};
      return count_extensions(buf, n, m, t);
    }));

  BigInt total = 0;
  for(auto& b : branches)
    total += b.get();
  return total;
}

BigInt brute_force_leaves(std::size_t m, std::size_t n)
{
  BigInt out = 1;
  for(std::size_t i = 0; i < n; ++i)
    out *= m;
  return out;
}

BigInt lifted_total(const PatternSet& t, std::size_t m, std::size_t n)
{
  return alpha_table(t, n, m).lifted_total(n, m);
}

namespace {

struct Triple {
  Letter a, b, c;
};

// (s, h, c) order-isomorphic to some forbidden a-bc
bool forbidden(const std::vector<Triple>& triples, Letter s, Letter h, Letter c)
{
  for(const auto& p : triples)
    if((s <=> h) == (p.a <=> p.b) && (s <=> c) == (p.a <=> p.c) && (h <=> c) == (p.b <=> p.c))
      return true;
  return false;
}

bool any_forbidden(const std::vector<Triple>& triples, std::uint64_t before, Letter h, Letter c)
{
  for(Letter s = 1; before != 0; ++s, before >>= 1)
    if((before & 1) && forbidden(triples, s, h, c))
      return true;
  return false;
}

// letters >= r move up by one
std::uint64_t shift_set(std::uint64_t set, Letter r)
{
  const std::uint64_t low = (std::uint64_t{1} << (r - 1)) - 1;
  return (set & low) | ((set & ~low) << 1);
}

std::uint64_t bit(Letter c) { return std::uint64_t{1} << (c - 1); }

} // namespace

AlphaMatrix state_count(const PatternSet& t, std::size_t m, std::size_t n_max)
{
  if(!t.all_type_1_2())
    fail(ErrorKind::Unsupported, "state counter needs type (1,2) patterns, got " + t.to_string());
  if(std::min(m, n_max) > 63)
    fail(ErrorKind::ResourceLimit, "state counter supports at most 63 distinct letters");

  std::vector<Triple> triples;
  for(const auto& p : t)
    triples.push_back({p.letters()[0], p.letters()[1], p.letters()[2]});

  AlphaMatrix alpha(n_max);
  alpha.set(0, 0, 1);
  if(n_max == 0 || m == 0)
    return alpha;

  std::map<StateKey, BigInt> level{{StateKey{1, 1, 0}, BigInt(1)}};
  for(std::size_t n = 1;; ++n)
    {
      for(const auto& [key, count] : level)
        alpha.add(n, key.k, count);
      if(n == n_max)
        break;

      std::map<StateKey, BigInt> next;
      for(const auto& [key, count] : level)
        {
          const std::uint64_t grown = key.before | bit(key.last);
          for(Letter c = 1; c <= key.k; ++c)
            if(!any_forbidden(triples, key.before, key.last, c))
              next[StateKey{key.k, c, grown}] += count;
          if(key.k >= m)
            continue;
          for(Letter r = 1; r <= key.k + 1; ++r)
            {
              const Letter h = key.last >= r ? key.last + 1 : key.last;
              if(!any_forbidden(triples, shift_set(key.before, r), h, r))
                next[StateKey{key.k + 1, r, shift_set(grown, r)}] += count;
            }
        }
      level = std::move(next);
    }
  return alpha;
}

} // namespace wordeco
