#include "core/verify.hpp"

#include "core/classes.hpp"
#include "core/eco.hpp"
#include "core/error.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace wordeco {

std::size_t VerifyReport::mismatch_count() const
{
  return static_cast<std::size_t>(
    std::count_if(cells.begin(), cells.end(), [](const VerifyCell& c) { return !c.agree; }));
}

Table VerifyReport::to_table() const
{
  static constexpr Method kColumns[] = {Method::Brute, Method::Generate, Method::States,
                                        Method::Tree,  Method::Formula,  Method::Gf};
  Table t;
  t.columns = {"patterns", "m", "n"};
  for(auto method : kColumns)
    t.columns.push_back(method_name(method));
  t.columns.push_back("agree");

  for(const auto& cell : cells)
    {
      auto known = classify(cell.patterns);
      const std::string name = known ? class_id(*known) : cell.patterns.to_string();
      std::vector<std::string> row{name, std::to_string(cell.m),
                                   std::to_string(cell.n)};
      for(auto method : kColumns)
        {
          auto it = cell.values.find(method);
          row.push_back(it == cell.values.end() ? "-" : to_decimal(it->second));
        }
      row.push_back(cell.agree ? "yes" : "NO");
      t.rows.push_back(std::move(row));

      if(!cell.agree)
        {
          std::string note = "mismatch at {" + name + "} m=" +
                             std::to_string(cell.m) + " n=" + std::to_string(cell.n) + ":";
          for(const auto& [method, value] : cell.values)
            note += " " + method_name(method) + "=" + to_decimal(value);
          t.notes.push_back(std::move(note));
        }
    }
  t.notes.push_back(std::to_string(cells.size()) + " cells, " + std::to_string(mismatch_count()) +
                    " mismatches");
  return t;
}

void check_brute_budget(std::size_t m, std::size_t n, bool force)
{
  if(!force && brute_force_leaves(m, n) > kBruteLeafBudget)
    fail(ErrorKind::ResourceLimit, "brute force over " + std::to_string(m) + "^" + std::to_string(n) +
                                       " words exceeds the default budget; pass --force");
}

std::vector<PatternSet> default_verify_sets()
{
  std::vector<PatternSet> out;
  for(auto c : known_classes())
    out.push_back(class_patterns(c));
  for(auto& t : open_classes())
    out.push_back(std::move(t));
  return out;
}

namespace {

// All cells for one (T, m); each method is run once to depth n_max where it
// yields every row at once.
std::vector<VerifyCell> verify_column(const PatternSet& t, std::size_t m, std::size_t n_max,
                                      const VerifyOptions& options)
{
  std::vector<VerifyCell> cells(n_max + 1);
  for(std::size_t n = 0; n <= n_max; ++n)
    {
      cells[n].patterns = t;
      cells[n].m = m;
      cells[n].n = n;
      cells[n].values[Method::Brute] = brute_force_total(t, m, n);
    }

  auto lift = [&](Method method, const AlphaMatrix& alpha) {
    for(std::size_t n = 0; n <= n_max; ++n)
      cells[n].values[method] = alpha.lifted_total(n, m);
  };
  lift(Method::Generate, alpha_table(t, n_max, m));
  if(t.all_type_1_2())
    lift(Method::States, state_count(t, m, n_max));

  MethodOptions mopts{options.as_printed};
  if(auto c = classify(t))
    {
      if(auto rule = rule_for(*c))
        lift(Method::Tree, tree_alpha_table(*rule, m, n_max));
      if(has_formula(*c))
        for(std::size_t n = 0; n <= n_max; ++n)
          cells[n].values[Method::Formula] = count_words(t, m, n, Method::Formula, mopts);
      if(has_gf(*c))
        {
          auto convention = options.as_printed ? SummandConvention::AsPrinted : SummandConvention::Calibrated;
          auto gf = class_gf(*c, m, n_max, convention);
          for(std::size_t n = 0; n <= n_max; ++n)
            cells[n].values[Method::Gf] = gf.series.coeff(n);
        }
    }

  for(auto& cell : cells)
    {
      const BigInt& ref = cell.values.begin()->second;
      cell.agree = std::all_of(cell.values.begin(), cell.values.end(),
                               [&](const auto& kv) { return kv.second == ref; });
    }
  return cells;
}

} // namespace

VerifyReport run_verify(const std::vector<PatternSet>& sets, std::size_t m_max, std::size_t n_max,
                        const VerifyOptions& options)
{
  if(m_max > 0)
    check_brute_budget(m_max, n_max, options.force);

  struct Job {
    const PatternSet* t;
    std::size_t m;
    std::vector<VerifyCell> cells;
  };
  std::vector<Job> jobs;
  for(const auto& t : sets)
    for(std::size_t m = 1; m <= m_max; ++m)
      jobs.push_back({&t, m, {}});

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));

  // jobs are claimed through a shared counter; each writes only its own slot
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for(std::size_t i = next++; i < jobs.size(); i = next++)
      {
        try
          {
            jobs[i].cells = verify_column(*jobs[i].t, jobs[i].m, n_max, options);
          }
        catch(...)
          {
            std::lock_guard lock(error_mutex);
            if(!error)
              error = std::current_exception();
          }
      }
  };
  std::vector<std::thread> pool;
  for(unsigned i = 1; i < threads; ++i)
    pool.emplace_back(worker);
  worker();
  for(auto& th : pool)
    th.join();
  if(error)
    std::rethrow_exception(error);

  VerifyReport report;
  for(auto& job : jobs)
    for(auto& cell : job.cells)
      report.cells.push_back(std::move(cell));
  std::stable_sort(report.cells.begin(), report.cells.end(), [](const VerifyCell& a, const VerifyCell& b) {
    return std::tie(a.patterns, a.m, a.n) < std::tie(b.patterns, b.m, b.n);
  });
  return report;
}

} // namespace wordeco
