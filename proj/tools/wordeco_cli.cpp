// wordeco command-line front end; everything goes through the C interface.

#include <wordeco/wordeco.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct Failure {
  int code;
};

struct TableDeleter {
  void operator()(wordeco_table* t) const { wordeco_table_free(t); }
};
using TablePtr = std::unique_ptr<wordeco_table, TableDeleter>;

struct SetDeleter {
  void operator()(wordeco_pattern_set* s) const { wordeco_pattern_set_free(s); }
};
using SetPtr = std::unique_ptr<wordeco_pattern_set, SetDeleter>;

void check(wordeco_status status)
{
  if(status == WORDECO_OK)
    return;
  std::cerr << "wordeco: " << wordeco_status_string(status) << ": " << wordeco_last_error() << "\n";
  throw Failure{kExitUsage};
}

std::string take(char* s)
{
  std::string out(s);
  wordeco_string_free(s);
  return out;
}

struct Output {
  std::string format = "table";
  std::string path;

  wordeco_format kind() const
  {
    if(format == "csv")
      return WORDECO_FORMAT_CSV;
    if(format == "json")
      return WORDECO_FORMAT_JSON;
    return WORDECO_FORMAT_TABLE;
  }

  void write(const std::string& text) const
  {
    if(path.empty())
      {
        std::cout << text;
        return;
      }
    std::ofstream f(path, std::ios::binary);
    if(!f)
      {
        std::cerr << "wordeco: cannot write " << path << "\n";
        throw Failure{kExitUsage};
      }
    f << text;
  }

  void write(const wordeco_table* table) const
  {
    char* text = nullptr;
    check(wordeco_table_render(table, kind(), &text));
    write(take(text));
    // CSV has no room for notes; keep them visible
    if(kind() == WORDECO_FORMAT_CSV)
      for(size_t i = 0; i < wordeco_table_note_count(table); ++i)
        std::cerr << "note: " << wordeco_table_note(table, i) << "\n";
  }
};

void add_output_options(CLI::App* cmd, Output& out)
{
  cmd->add_option("--format", out.format, "table, csv or json")
    ->check(CLI::IsMember({"table", "csv", "json"}))
    ->capture_default_str();
  cmd->add_option("--out", out.path, "write to FILE instead of standard output");
}

SetPtr parse_set(const std::string& text)
{
  wordeco_pattern_set* raw = nullptr;
  check(wordeco_pattern_set_parse(text.c_str(), &raw));
  return SetPtr(raw);
}

wordeco_method parse_method(const std::string& name)
{
  wordeco_method m{};
  check(wordeco_method_from_name(name.c_str(), &m));
  return m;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Count words over a finite ordered alphabet that avoid dashed patterns"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wordeco_version()));

  Output out;
  std::string pattern, word, patterns, method = "brute", class_id;
  unsigned m = 0, n = 0, embed_m = 0, n_max = 5, order = 16, m_max = 3, verify_n_max = 8;
  bool force = false, as_printed = false, detailed = false;
  std::vector<std::string> sets;

  auto* check_cmd = app.add_subcommand("check", "test whether a word contains a pattern");
  check_cmd->add_option("pattern", pattern, "dashed pattern, e.g. 1-12")->required();
  check_cmd->add_option("word", word, "word, e.g. 311472511")->required();
  add_output_options(check_cmd, out);

  auto* reduce_cmd = app.add_subcommand("reduce", "print the reduced form of a word");
  reduce_cmd->add_option("word", word)->required();
  reduce_cmd->add_option("--embed", embed_m, "list the relabellings onto subsets of {1..M} instead");
  add_output_options(reduce_cmd, out);

  auto* sons_cmd = app.add_subcommand("sons", "list the sons of a reduced avoiding word");
  sons_cmd->add_option("word", word)->required();
  sons_cmd->add_option("-p,--patterns", patterns, "comma-separated pattern set");
  sons_cmd->add_option("-m", m, "alphabet size")->required();
  add_output_options(sons_cmd, out);

  auto* count_cmd = app.add_subcommand("count", "count avoiding words of length n over m letters");
  count_cmd->add_option("-p,--patterns", patterns, "comma-separated pattern set");
  count_cmd->add_option("-m", m, "alphabet size")->required();
  count_cmd->add_option("-n", n, "word length")->required();
  count_cmd->add_option("--method", method, "brute, generate, states, tree, formula or gf")
    ->capture_default_str();
  count_cmd->add_flag("--force", force, "lift the brute-force budget");
  count_cmd->add_flag("--as-printed", as_printed, "evaluate published formulas without corrections");
  add_output_options(count_cmd, out);

  auto* alpha_cmd = app.add_subcommand("alpha", "table of reduced avoiders by length and letter count");
  alpha_cmd->add_option("-p,--patterns", patterns, "comma-separated pattern set");
  alpha_cmd->add_option("-n", n_max, "largest length")->capture_default_str();
  alpha_cmd->add_option("-m", m, "alphabet size")->required();
  alpha_cmd->add_option("--method", method, "brute, generate, states, tree, formula or gf")
    ->capture_default_str();
  alpha_cmd->add_flag("--force", force, "lift the brute-force budget");
  add_output_options(alpha_cmd, out);

  auto* eco_cmd = app.add_subcommand("eco-matrix", "label counts per level of a generating tree");
  eco_cmd->add_option("--class", class_id, "1-12,2-21, 1-21,2-12 or 1-11,1-12")->required();
  eco_cmd->add_option("-m", m, "alphabet size (0 or omitted: no cap)");
  eco_cmd->add_option("-n", n_max, "number of levels")->capture_default_str();
  eco_cmd->add_flag("--detailed", detailed, "distinguish first and repeated last letters");
  add_output_options(eco_cmd, out);

  auto* gf_cmd = app.add_subcommand("gf", "coefficients of a generating function");
  gf_cmd->add_option("--class", class_id, "1-11,1-12, 1-11,1-21, 1-11,1-22 or 2-11,1-22")->required();
  gf_cmd->add_option("-m", m, "alphabet size")->required();
  gf_cmd->add_option("-N,--order", order, "truncation order")->capture_default_str();
  gf_cmd->add_flag("--as-printed", as_printed, "use the published summands without corrections");
  add_output_options(gf_cmd, out);

  auto* verify_cmd = app.add_subcommand("verify", "cross-check every counting method on a grid");
  verify_cmd->add_option("--set", sets, "pattern set (repeatable; default: twelve classes)");
  verify_cmd->add_option("--m-max", m_max, "largest alphabet")->capture_default_str();
  verify_cmd->add_option("--n-max", verify_n_max, "largest length")->capture_default_str();
  verify_cmd->add_flag("--force", force, "lift the brute-force budget");
  verify_cmd->add_flag("--as-printed", as_printed, "evaluate published formulas without corrections");
  add_output_options(verify_cmd, out);

  try
    {
      app.parse(argc, argv);
    }
  catch(const CLI::ParseError& e)
    {
      int code = app.exit(e);
      return code == 0 ? kExitOk : kExitUsage;
    }

  unsigned flags = (force ? WORDECO_FLAG_FORCE : 0u) | (as_printed ? WORDECO_FLAG_AS_PRINTED : 0u) |
                   (detailed ? WORDECO_FLAG_DETAILED : 0u);

  try
    {
      if(*check_cmd)
        {
          int contains = 0;
          std::vector<size_t> witness(64);
          size_t len = 0;
          check(wordeco_check(pattern.c_str(), word.c_str(), &contains, witness.data(), witness.size(), &len));
          std::string positions;
          for(size_t i = 0; i < len && i < witness.size(); ++i)
            positions += (i ? "," : "") + std::to_string(witness[i]);
          if(out.format == "json")
            out.write("{\n  \"pattern\": \"" + pattern + "\",\n  \"word\": \"" + word +
                      "\",\n  \"contains\": " + (contains ? "true" : "false") + ",\n  \"witness\": [" +
                      positions + "]\n}\n");
          else if(out.format == "csv")
            out.write("pattern,word,verdict,witness\n\"" + pattern + "\",\"" + word + "\"," +
                      (contains ? "contains" : "avoids") + ",\"" + positions + "\"\n");
          else
            out.write(std::string(contains ? "contains" : "avoids") +
                      (contains ? " at positions " + positions : std::string()) + "\n");
        }
      else if(*reduce_cmd)
        {
          if(embed_m > 0)
            {
              wordeco_table* t = nullptr;
              check(wordeco_embeddings(word.c_str(), embed_m, &t));
              out.write(TablePtr(t).get());
            }
          else
            {
              char* r = nullptr;
              check(wordeco_reduce(word.c_str(), &r));
              out.write(take(r) + "\n");
            }
        }
      else if(*sons_cmd)
        {
          auto set = parse_set(patterns);
          wordeco_table* t = nullptr;
          check(wordeco_sons(word.c_str(), set.get(), m, &t));
          out.write(TablePtr(t).get());
        }
      else if(*count_cmd)
        {
          auto set = parse_set(patterns);
          char* value = nullptr;
          check(wordeco_count(set.get(), m, n, parse_method(method), flags, &value));
          std::string v = take(value);
          if(out.format == "json")
            out.write("{\n  \"count\": \"" + v + "\"\n}\n");
          else if(out.format == "csv")
            out.write("count\n" + v + "\n");
          else
            out.write(v + "\n");
        }
      else if(*alpha_cmd)
        {
          auto set = parse_set(patterns);
          wordeco_table* t = nullptr;
          check(wordeco_alpha_table(set.get(), n_max, m, parse_method(method), flags, &t));
          out.write(TablePtr(t).get());
        }
      else if(*eco_cmd)
        {
          wordeco_table* t = nullptr;
          check(wordeco_eco_matrix(class_id.c_str(), m, n_max, flags, &t));
          out.write(TablePtr(t).get());
        }
      else if(*gf_cmd)
        {
          wordeco_table* t = nullptr;
          check(wordeco_gf(class_id.c_str(), m, order, flags, &t));
          out.write(TablePtr(t).get());
        }
      else if(*verify_cmd)
        {
          std::vector<const char*> raw;
          for(const auto& s : sets)
            raw.push_back(s.c_str());
          wordeco_table* t = nullptr;
          size_t mismatches = 0;
          check(wordeco_verify(sets.empty() ? nullptr : raw.data(), raw.size(), m_max, verify_n_max, flags,
                               &t, &mismatches));
          out.write(TablePtr(t).get());
          return mismatches ? kExitMismatch : kExitOk;
        }
    }
  catch(const Failure& f)
    {
      return f.code;
    }
  return kExitOk;
}
