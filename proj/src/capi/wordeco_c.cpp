#include <wordeco/wordeco.h>

#include "core/classes.hpp"
#include "core/eco.hpp"
#include "core/emit.hpp"
#include "core/enumerator.hpp"
#include "core/error.hpp"
#include "core/methods.hpp"
#include "core/patterns.hpp"
#include "core/verify.hpp"
#include "core/words.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct wordeco_pattern_set {
  wordeco::PatternSet value;
};

struct wordeco_table {
  wordeco::Table value;
};

namespace {

thread_local std::string last_error;

wordeco_status set_error(wordeco_status status, const char* what)
{
  last_error = what;
  return status;
}

wordeco_status to_status(wordeco::ErrorKind kind)
{
  switch(kind)
    {
    case wordeco::ErrorKind::InvalidArgument: return WORDECO_ERR_INVALID_ARGUMENT;
    case wordeco::ErrorKind::Parse: return WORDECO_ERR_PARSE;
    case wordeco::ErrorKind::Unsupported: return WORDECO_ERR_UNSUPPORTED;
    case wordeco::ErrorKind::ResourceLimit: return WORDECO_ERR_RESOURCE_LIMIT;
    }
  return WORDECO_ERR_INTERNAL;
}

// Runs `body` and converts any exception into a status code.
template<class F>
wordeco_status guarded(F&& body)
{
  try
    {
      last_error.clear();
      body();
      return WORDECO_OK;
    }
  catch(const wordeco::Error& e)
    {
      return set_error(to_status(e.kind()), e.what());
    }
  catch(const std::bad_alloc&)
    {
      return set_error(WORDECO_ERR_RESOURCE_LIMIT, "out of memory");
    }
  catch(const std::exception& e)
    {
      return set_error(WORDECO_ERR_INTERNAL, e.what());
    }
  catch(...)
    {
      return set_error(WORDECO_ERR_INTERNAL, "unknown error");
    }
}

void require(const void* p, const char* name)
{
  if(p == nullptr)
    wordeco::fail(wordeco::ErrorKind::InvalidArgument, std::string(name) + " must not be NULL");
}

char* dup_string(const std::string& s)
{
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if(out == nullptr)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wordeco::Method to_method(wordeco_method method)
{
  switch(method)
    {
    case WORDECO_METHOD_BRUTE: return wordeco::Method::Brute;
    case WORDECO_METHOD_GENERATE: return wordeco::Method::Generate;
    case WORDECO_METHOD_STATES: return wordeco::Method::States;
    case WORDECO_METHOD_TREE: return wordeco::Method::Tree;
    case WORDECO_METHOD_FORMULA: return wordeco::Method::Formula;
    case WORDECO_METHOD_GF: return wordeco::Method::Gf;
    }
  wordeco::fail(wordeco::ErrorKind::InvalidArgument, "unknown method");
}

void emit_table(wordeco::Table table, wordeco_table** out)
{
  *out = new wordeco_table{std::move(table)};
}

} // namespace

extern "C" {

const char* wordeco_version(void) { return "0.1.0"; }

const char* wordeco_status_string(wordeco_status status)
{
  switch(status)
    {
    case WORDECO_OK: return "ok";
    case WORDECO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WORDECO_ERR_PARSE: return "parse error";
    case WORDECO_ERR_UNSUPPORTED: return "unsupported";
    case WORDECO_ERR_RESOURCE_LIMIT: return "resource limit";
    case WORDECO_ERR_INTERNAL: return "internal error";
    }
  return "unknown status";
}

const char* wordeco_last_error(void) { return last_error.c_str(); }

void wordeco_string_free(char* s) { std::free(s); }

wordeco_status wordeco_method_from_name(const char* name, wordeco_method* out)
{
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    auto m = wordeco::parse_method(name);
    if(!m)
      wordeco::fail(wordeco::ErrorKind::Parse, std::string("unknown method \"") + name + "\"");
    *out = static_cast<wordeco_method>(*m);
  });
}

wordeco_status wordeco_pattern_set_parse(const char* text, wordeco_pattern_set** out)
{
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wordeco_pattern_set{wordeco::PatternSet::parse(text)};
  });
}

void wordeco_pattern_set_free(wordeco_pattern_set* set) { delete set; }

size_t wordeco_pattern_set_size(const wordeco_pattern_set* set) { return set ? set->value.size() : 0; }

wordeco_status wordeco_pattern_set_to_string(const wordeco_pattern_set* set, char** out)
{
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    *out = dup_string(set->value.to_string());
  });
}

wordeco_status wordeco_reduce(const char* word, char** out)
{
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    *out = dup_string(wordeco::reduce(wordeco::Word::parse(word)).to_string());
  });
}

wordeco_status wordeco_is_reduced(const char* word, int* out)
{
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    *out = wordeco::is_reduced(wordeco::Word::parse(word)) ? 1 : 0;
  });
}

wordeco_status wordeco_order_isomorphic(const char* u, const char* v, int* out)
{
  return guarded([&] {
    require(u, "u");
    require(v, "v");
    require(out, "out");
    *out = wordeco::order_isomorphic(wordeco::Word::parse(u), wordeco::Word::parse(v)) ? 1 : 0;
  });
}

wordeco_status wordeco_embeddings(const char* word, unsigned m, wordeco_table** out)
{
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    wordeco::ReducedWord w(wordeco::Word::parse(word));
    wordeco::Table t;
    t.columns = {"word"};
    for(const auto& e : wordeco::all_embeddings(w, m))
      t.rows.push_back({e.to_string()});
    emit_table(std::move(t), out);
  });
}

wordeco_status wordeco_check(const char* pattern, const char* word, int* contains, size_t* witness,
                             size_t witness_capacity, size_t* witness_length)
{
  return guarded([&] {
    require(pattern, "pattern");
    require(word, "word");
    require(contains, "contains");
    auto p = wordeco::DashedPattern::parse(pattern);
    auto w = wordeco::Word::parse(word);
    auto found = wordeco::find_occurrence(p, w.letters());
    *contains = found ? 1 : 0;
    if(witness_length)
      *witness_length = found ? found->size() : 0;
    if(found && witness)
      for(size_t i = 0; i < found->size() && i < witness_capacity; ++i)
        witness[i] = (*found)[i] + 1;
  });
}

wordeco_status wordeco_avoids(const wordeco_pattern_set* set, const char* word, int* out)
{
  return guarded([&] {
    require(set, "set");
    require(word, "word");
    require(out, "out");
    *out = wordeco::avoids(set->value, wordeco::Word::parse(word)) ? 1 : 0;
  });
}

wordeco_status wordeco_sons(const char* word, const wordeco_pattern_set* set, unsigned m,
                            wordeco_table** out)
{
  return guarded([&] {
    require(word, "word");
    require(set, "set");
    require(out, "out");
    wordeco::ReducedWord w(wordeco::Word::parse(word));
    wordeco::Table t;
    t.columns = {"son", "k"};
    for(const auto& s : wordeco::sons(w, set->value, m))
      t.rows.push_back({s.to_string(), std::to_string(s.span())});
    emit_table(std::move(t), out);
  });
}

wordeco_status wordeco_count(const wordeco_pattern_set* set, unsigned m, unsigned n,
                             wordeco_method method, unsigned flags, char** out)
{
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    auto mth = to_method(method);
    if(mth == wordeco::Method::Brute)
      wordeco::check_brute_budget(m, n, flags & WORDECO_FLAG_FORCE);
    wordeco::MethodOptions options{(flags & WORDECO_FLAG_AS_PRINTED) != 0};
    *out = dup_string(wordeco::to_decimal(wordeco::count_words(set->value, m, n, mth, options)));
  });
}

wordeco_status wordeco_alpha_table(const wordeco_pattern_set* set, unsigned n_max, unsigned m,
                                   wordeco_method method, unsigned flags, wordeco_table** out)
{
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    auto mth = to_method(method);
    if(mth == wordeco::Method::Brute)
      wordeco::check_brute_budget(std::min(m, n_max), n_max, flags & WORDECO_FLAG_FORCE);
    wordeco::MethodOptions options{(flags & WORDECO_FLAG_AS_PRINTED) != 0};
    emit_table(wordeco::alpha_to_table(wordeco::alpha_matrix(set->value, n_max, m, mth, options)), out);
  });
}

wordeco_status wordeco_eco_matrix(const char* class_id, unsigned m, unsigned n_max, unsigned flags,
                                  wordeco_table** out)
{
  return guarded([&] {
    require(class_id, "class_id");
    require(out, "out");
    auto c = wordeco::parse_class(class_id);
    auto rule = wordeco::rule_for(c, flags & WORDECO_FLAG_DETAILED);
    if(!rule)
      wordeco::fail(wordeco::ErrorKind::Unsupported,
                    "no succession rule for class " + wordeco::class_id(c));
    wordeco::Cap cap;
    if(m != WORDECO_UNCAPPED)
      cap = m;
    emit_table(wordeco::eco_to_table(wordeco::eco_matrix(*rule, cap, n_max)), out);
  });
}

wordeco_status wordeco_gf(const char* class_id, unsigned m, unsigned order, unsigned flags,
                          wordeco_table** out)
{
  return guarded([&] {
    require(class_id, "class_id");
    require(out, "out");
    auto c = wordeco::parse_class(class_id);
    auto convention = (flags & WORDECO_FLAG_AS_PRINTED) ? wordeco::SummandConvention::AsPrinted
                                                        : wordeco::SummandConvention::Calibrated;
    auto result = wordeco::class_gf(c, m, order, convention);
    auto table = wordeco::series_to_table(result.series);
    for(auto& note : result.corrections)
      table.notes.push_back(note);
    emit_table(std::move(table), out);
  });
}

wordeco_status wordeco_verify(const char* const* sets, size_t set_count, unsigned m_max,
                              unsigned n_max, unsigned flags, wordeco_table** out, size_t* mismatches)
{
  return guarded([&] {
    require(out, "out");
    std::vector<wordeco::PatternSet> parsed;
    if(sets == nullptr)
      parsed = wordeco::default_verify_sets();
    else
      for(size_t i = 0; i < set_count; ++i)
        {
          require(sets[i], "sets[i]");
          parsed.push_back(wordeco::PatternSet::parse(sets[i]));
        }
    wordeco::VerifyOptions options;
    options.as_printed = flags & WORDECO_FLAG_AS_PRINTED;
    options.force = flags & WORDECO_FLAG_FORCE;
    auto report = wordeco::run_verify(parsed, m_max, n_max, options);
    if(mismatches)
      *mismatches = report.mismatch_count();
    emit_table(report.to_table(), out);
  });
}

size_t wordeco_table_columns(const wordeco_table* table) { return table ? table->value.columns.size() : 0; }

size_t wordeco_table_rows(const wordeco_table* table) { return table ? table->value.rows.size() : 0; }

const char* wordeco_table_column_name(const wordeco_table* table, size_t column)
{
  if(!table || column >= table->value.columns.size())
    return nullptr;
  return table->value.columns[column].c_str();
}

const char* wordeco_table_cell(const wordeco_table* table, size_t row, size_t column)
{
  if(!table || row >= table->value.rows.size() || column >= table->value.rows[row].size())
    return nullptr;
  return table->value.rows[row][column].c_str();
}

size_t wordeco_table_note_count(const wordeco_table* table) { return table ? table->value.notes.size() : 0; }

const char* wordeco_table_note(const wordeco_table* table, size_t index)
{
  if(!table || index >= table->value.notes.size())
    return nullptr;
  return table->value.notes[index].c_str();
}

wordeco_status wordeco_table_render(const wordeco_table* table, wordeco_format format, char** out)
{
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    wordeco::Format f;
    switch(format)
      {
      case WORDECO_FORMAT_TABLE: f = wordeco::Format::Text; break;
      case WORDECO_FORMAT_CSV: f = wordeco::Format::Csv; break;
      case WORDECO_FORMAT_JSON: f = wordeco::Format::Json; break;
      default: wordeco::fail(wordeco::ErrorKind::InvalidArgument, "unknown format");
      }
    *out = dup_string(wordeco::render(table->value, f));
  });
}

void wordeco_table_free(wordeco_table* table) { delete table; }

} // extern "C"
