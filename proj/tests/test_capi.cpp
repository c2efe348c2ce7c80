// Exercises the shared library through its C interface only.
#include <doctest.h>

#include <wordeco/wordeco.h>

#include <string>
#include <vector>

namespace {

struct TableGuard {
  wordeco_table* t = nullptr;
  ~TableGuard() { wordeco_table_free(t); }
};

struct SetGuard {
  wordeco_pattern_set* s = nullptr;
  ~SetGuard() { wordeco_pattern_set_free(s); }
};

std::string take(char* s)
{
  std::string out = s ? s : "";
  wordeco_string_free(s);
  return out;
}

} // namespace

TEST_CASE("version and status strings")
{
  CHECK(std::string(wordeco_version()) == "0.1.0");
  CHECK(std::string(wordeco_status_string(WORDECO_OK)) == "ok");
  CHECK(wordeco_status_string(static_cast<wordeco_status>(99)) != nullptr);
}

TEST_CASE("check with witness")
{
  int contains = -1;
  size_t witness[8] = {};
  size_t length = 0;
  REQUIRE(wordeco_check("121", "311472511", &contains, witness, 8, &length) == WORDECO_OK);
  CHECK(contains == 1);
  REQUIRE(length == 3);
  CHECK(witness[0] < witness[1]);
  CHECK(witness[1] < witness[2]);
  CHECK(witness[0] >= 1);

  REQUIRE(wordeco_check("32-1", "41325", &contains, nullptr, 0, &length) == WORDECO_OK);
  CHECK(contains == 0);
  CHECK(length == 0);
  REQUIRE(wordeco_check("321", "41325", &contains, witness, 1, &length) == WORDECO_OK);
  CHECK(contains == 1);
  CHECK(length == 3);

  CHECK(wordeco_check("1--2", "12", &contains, nullptr, 0, nullptr) == WORDECO_ERR_PARSE);
  CHECK(std::string(wordeco_last_error()).size() > 0);
  CHECK(wordeco_check(nullptr, "12", &contains, nullptr, 0, nullptr) == WORDECO_ERR_INVALID_ARGUMENT);
}

TEST_CASE("words")
{
  char* s = nullptr;
  REQUIRE(wordeco_reduce("41776", &s) == WORDECO_OK);
  CHECK(take(s) == "21443");
  int flag = -1;
  REQUIRE(wordeco_is_reduced("1213", &flag) == WORDECO_OK);
  CHECK(flag == 1);
  REQUIRE(wordeco_order_isomorphic("132", "153", &flag) == WORDECO_OK);
  CHECK(flag == 1);

  TableGuard g;
  REQUIRE(wordeco_embeddings("1213", 5, &g.t) == WORDECO_OK);
  CHECK(wordeco_table_rows(g.t) == 10);
  CHECK(std::string(wordeco_table_cell(g.t, 0, 0)) == "1213");
  CHECK(std::string(wordeco_table_cell(g.t, 9, 0)) == "3435");
  CHECK(wordeco_table_cell(g.t, 10, 0) == nullptr);
  CHECK(wordeco_embeddings("1313", 5, &g.t) != WORDECO_OK);
}

TEST_CASE("pattern sets and counting")
{
  SetGuard set;
  REQUIRE(wordeco_pattern_set_parse("2-21,1-12", &set.s) == WORDECO_OK);
  CHECK(wordeco_pattern_set_size(set.s) == 2);
  char* s = nullptr;
  REQUIRE(wordeco_pattern_set_to_string(set.s, &s) == WORDECO_OK);
  CHECK(take(s) == "1-12,2-21");

  int avoids = -1;
  REQUIRE(wordeco_avoids(set.s, "121", &avoids) == WORDECO_OK);
  CHECK(avoids == 1);

  for(auto method : {WORDECO_METHOD_BRUTE, WORDECO_METHOD_GENERATE, WORDECO_METHOD_STATES,
                     WORDECO_METHOD_TREE, WORDECO_METHOD_FORMULA})
    {
      REQUIRE(wordeco_count(set.s, 2, 3, method, 0, &s) == WORDECO_OK);
      CHECK(take(s) == "6");
    }
  REQUIRE(wordeco_count(set.s, 2, 3, WORDECO_METHOD_FORMULA, WORDECO_FLAG_AS_PRINTED, &s) == WORDECO_OK);
  CHECK(take(s) == "2");
  CHECK(wordeco_count(set.s, 2, 3, WORDECO_METHOD_GF, 0, &s) == WORDECO_ERR_UNSUPPORTED);
  CHECK(wordeco_count(set.s, 10, 10, WORDECO_METHOD_BRUTE, 0, &s) == WORDECO_ERR_RESOURCE_LIMIT);

  wordeco_method m;
  REQUIRE(wordeco_method_from_name("states", &m) == WORDECO_OK);
  CHECK(m == WORDECO_METHOD_STATES);
  CHECK(wordeco_method_from_name("nope", &m) != WORDECO_OK);

  SetGuard bad;
  CHECK(wordeco_pattern_set_parse("1-13", &bad.s) == WORDECO_ERR_PARSE);
  CHECK(bad.s == nullptr);
}

TEST_CASE("tables")
{
  SetGuard set;
  REQUIRE(wordeco_pattern_set_parse("1-21,2-12", &set.s) == WORDECO_OK);
  TableGuard alpha;
  REQUIRE(wordeco_alpha_table(set.s, 5, 5, WORDECO_METHOD_TREE, 0, &alpha.t) == WORDECO_OK);
  CHECK(wordeco_table_columns(alpha.t) == 7);
  CHECK(std::string(wordeco_table_column_name(alpha.t, 0)) == "n");
  CHECK(std::string(wordeco_table_cell(alpha.t, 5, 4)) == "36");

  SetGuard other;
  TableGuard sons;
  REQUIRE(wordeco_pattern_set_parse("1-22,2-12", &other.s) == WORDECO_OK);
  REQUIRE(wordeco_sons("12132", other.s, 3, &sons.t) == WORDECO_OK);
  REQUIRE(wordeco_table_rows(sons.t) == 1);
  CHECK(std::string(wordeco_table_cell(sons.t, 0, 0)) == "121321");

  TableGuard eco;
  REQUIRE(wordeco_eco_matrix("1-11,1-12", WORDECO_UNCAPPED, 5, 0, &eco.t) == WORDECO_OK);
  CHECK(wordeco_table_columns(eco.t) == 16);
  CHECK(std::string(wordeco_table_cell(eco.t, 4, 15)) == "120");
  CHECK(wordeco_eco_matrix("1-11,1-21", 0, 5, 0, &eco.t) == WORDECO_ERR_UNSUPPORTED);

  TableGuard gf;
  REQUIRE(wordeco_gf("1-22,2-11", 2, 5, 0, &gf.t) == WORDECO_OK);
  CHECK(std::string(wordeco_table_cell(gf.t, 5, 1)) == "10");
  CHECK(wordeco_table_note_count(gf.t) == 2);
  CHECK(wordeco_table_note(gf.t, 2) == nullptr);

  char* s = nullptr;
  REQUIRE(wordeco_table_render(gf.t, WORDECO_FORMAT_CSV, &s) == WORDECO_OK);
  CHECK(take(s).rfind("n,coefficient\n0,1\n1,2\n", 0) == 0);
}

TEST_CASE("verify")
{
  TableGuard report;
  size_t mismatches = 99;
  REQUIRE(wordeco_verify(nullptr, 0, 2, 5, 0, &report.t, &mismatches) == WORDECO_OK);
  CHECK(mismatches == 0);
  CHECK(wordeco_table_rows(report.t) == 12 * 2 * 6);

  TableGuard printed;
  const char* sets[] = {"1-12,2-21"};
  REQUIRE(wordeco_verify(sets, 1, 2, 3, WORDECO_FLAG_AS_PRINTED, &printed.t, &mismatches) == WORDECO_OK);
  CHECK(mismatches == 3);
}
