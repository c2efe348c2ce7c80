#include "core/eco.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <tuple>

namespace wordeco {

using namespace label;

namespace {

template<class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template<class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// (letters, 0 for first-occurrence labels / 1 otherwise, h)
std::tuple<std::size_t, int, std::uint32_t> column_key(const Label& l)
{
  return std::visit(overloaded{
                      [](const Plain& p) { return std::tuple<std::size_t, int, std::uint32_t>{p.k, 0, p.h}; },
                      [](const Barred& b) { return std::tuple<std::size_t, int, std::uint32_t>{b.k, 1, b.h}; },
                      [](const Odd& o) { return std::tuple<std::size_t, int, std::uint32_t>{o.k, 0, 0}; },
                      [](const One& o) { return std::tuple<std::size_t, int, std::uint32_t>{o.k, 1, 0}; },
                      [](const Arr& a) { return std::tuple<std::size_t, int, std::uint32_t>{a.k - 2, 0, 0}; },
                      [](const Sub& s) {
                        return std::tuple<std::size_t, int, std::uint32_t>{s.k, s.h == s.k + 1 ? 0 : 1, s.h};
                      },
                    },
                    l);
}

} // namespace

std::size_t letters_of(const Label& l) { return std::get<0>(column_key(l)); }

std::string label_name(const Label& l)
{
  return std::visit(overloaded{
                      [](const Plain& p) { return std::to_string(p.k) + "_" + std::to_string(p.h); },
                      [](const Barred& b) { return "~" + std::to_string(b.k) + "_" + std::to_string(b.h); },
                      [](const Odd& o) { return std::to_string(2 * o.k + 1); },
                      [](const One& o) { return "1_" + std::to_string(o.k); },
                      [](const Arr& a) { return std::to_string(a.k); },
                      [](const Sub& s) { return std::to_string(s.k) + "_" + std::to_string(s.h); },
                    },
                    l);
}

bool column_before(const Label& a, const Label& b)
{
  auto [ka, ga, ha] = column_key(a);
  auto [kb, gb, hb] = column_key(b);
  if(ka != kb)
    return ka < kb;
  if(ga != gb)
    return ga < gb;
  if(ha != hb)
    return ha > hb;
  return a < b;
}

Production SuccessionRule::produce(const Label& l, Cap cap) const
{
  Production out = produce_(l);
  if(cap)
    std::erase_if(out, [&](const auto& child) { return letters_of(child.first) > *cap; });
  return out;
}

SuccessionRule rule_1_12__2_21()
{
  return SuccessionRule("1-12,2-21", Odd{1}, [](const Label& l) -> Production {
    if(auto* o = std::get_if<Odd>(&l))
      return {{One{o->k}, o->k}, {Odd{o->k + 1}, o->k + 1}};
    if(auto* o = std::get_if<One>(&l))
      return {{*o, 1}};
    fail(ErrorKind::InvalidArgument, "label " + label_name(l) + " is foreign to rule 1-12,2-21");
  });
}

SuccessionRule rule_1_21__2_12()
{
  return SuccessionRule("1-21,2-12", Arr{3}, [](const Label& l) -> Production {
    if(auto* a = std::get_if<Arr>(&l))
      return {{*a, 1}, {Arr{a->k + 1}, a->k - 1}};
    fail(ErrorKind::InvalidArgument, "label " + label_name(l) + " is foreign to rule 1-21,2-12");
  });
}

SuccessionRule rule_1_11__1_12()
{
  return SuccessionRule("1-11,1-12", Sub{1, 2}, [](const Label& l) -> Production {
    auto* s = std::get_if<Sub>(&l);
    if(!s)
      fail(ErrorKind::InvalidArgument, "label " + label_name(l) + " is foreign to rule 1-11,1-12");
    Production out;
    for(std::uint32_t i = 1; i < s->h; ++i)
      out.push_back({Sub{s->k, i}, 1});
    out.push_back({Sub{s->k + 1, s->k + 2}, s->h});
    return out;
  });
}

namespace {

Production first_occurrence_children(std::uint32_t k)
{
  Production out;
  for(std::uint32_t c = 1; c <= k; ++c)
    out.push_back({Barred{k, c}, 1});
  for(std::uint32_t r = 1; r <= k + 1; ++r)
    out.push_back({Plain{k + 1, r}, 1});
  return out;
}

} // namespace

SuccessionRule rule_1_12__2_21_detailed()
{
  return SuccessionRule("1-12,2-21 detailed", Plain{1, 1}, [](const Label& l) -> Production {
    if(auto* p = std::get_if<Plain>(&l))
      return first_occurrence_children(p->k);
    if(auto* b = std::get_if<Barred>(&l))
      return {{*b, 1}};
    fail(ErrorKind::InvalidArgument, "label " + label_name(l) + " is foreign to the detailed rule");
  });
}

SuccessionRule rule_1_11__1_12_detailed()
{
  return SuccessionRule("1-11,1-12 detailed", Plain{1, 1}, [](const Label& l) -> Production {
    if(auto* p = std::get_if<Plain>(&l))
      return first_occurrence_children(p->k);
    if(auto* b = std::get_if<Barred>(&l))
      {
        Production out;
        for(std::uint32_t c = 1; c < b->h; ++c)
          out.push_back({Barred{b->k, c}, 1});
        for(std::uint32_t r = 1; r <= b->h; ++r)
          out.push_back({Plain{b->k + 1, r}, 1});
        return out;
      }
    fail(ErrorKind::InvalidArgument, "label " + label_name(l) + " is foreign to the detailed rule");
  });
}

std::vector<LevelVector> levels(const SuccessionRule& rule, Cap cap, std::size_t n_max)
{
  std::vector<LevelVector> out;
  if(n_max == 0)
    return out;
  if(cap && letters_of(rule.axiom()) > *cap)
    {
      out.resize(n_max);
      return out;
    }
  out.push_back({{rule.axiom(), BigInt(1)}});
  while(out.size() < n_max)
    {
      LevelVector next;
      for(const auto& [l, count] : out.back())
        for(const auto& [child, mult] : rule.produce(l, cap))
          next[child] += count * mult;
      out.push_back(std::move(next));
    }
  return out;
}

EcoMatrix eco_matrix(const SuccessionRule& rule, Cap cap, std::size_t n_max)
{
  auto lv = levels(rule, cap, n_max);
  EcoMatrix out;
  for(const auto& level : lv)
    for(const auto& entry : level)
      if(std::find(out.columns.begin(), out.columns.end(), entry.first) == out.columns.end())
        out.columns.push_back(entry.first);
  std::sort(out.columns.begin(), out.columns.end(), column_before);

  for(const auto& level : lv)
    {
      std::vector<BigInt> row;
      for(const auto& col : out.columns)
        {
          auto it = level.find(col);
          row.push_back(it == level.end() ? BigInt(0) : it->second);
        }
      out.rows.push_back(std::move(row));
    }
  return out;
}

BigInt alpha_from_tree(const SuccessionRule& rule, Cap cap, std::size_t n, std::size_t k)
{
  return tree_alpha_table(rule, cap, n).at(n, k);
}

AlphaMatrix tree_alpha_table(const SuccessionRule& rule, Cap cap, std::size_t n_max)
{
  AlphaMatrix alpha(n_max);
  alpha.set(0, 0, 1);
  auto lv = levels(rule, cap, n_max);
  for(std::size_t t = 0; t < lv.size(); ++t)
    for(const auto& [l, count] : lv[t])
      {
        const std::size_t k = letters_of(l);
        if(k > t + 1)
          fail(ErrorKind::InvalidArgument, "label " + label_name(l) + " at level " +
                                               std::to_string(t + 1) + " has too many letters");
        alpha.add(t + 1, k, count);
      }
  return alpha;
}

} // namespace wordeco
