/* wordeco: counting words that avoid dashed patterns.
 *
 * C interface to the counting engines. All functions return a wordeco_status;
 * on failure wordeco_last_error() describes the problem (per thread). Counts
 * are exact and always travel as decimal strings. Strings returned through
 * char** out-parameters are owned by the caller and released with
 * wordeco_string_free(); handles are released with their *_free function.
 *
 * Words are written as digit strings ("12132") or comma-separated letters
 * ("1,10,3"); patterns as digit blocks joined by dashes ("1-12"); pattern
 * sets as comma-separated patterns ("1-12,2-21"), the empty string being the
 * empty set.
 */
#ifndef WORDECO_WORDECO_H
#define WORDECO_WORDECO_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(WORDECO_BUILDING_LIB)
#    define WORDECO_API __declspec(dllexport)
#  else
#    define WORDECO_API __declspec(dllimport)
#  endif
#else
#  define WORDECO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wordeco_status {
  WORDECO_OK = 0,
  WORDECO_ERR_INVALID_ARGUMENT = 1,
  WORDECO_ERR_PARSE = 2,
  WORDECO_ERR_UNSUPPORTED = 3,    /* method does not cover the pattern set */
  WORDECO_ERR_RESOURCE_LIMIT = 4, /* brute-force budget exceeded */
  WORDECO_ERR_INTERNAL = 5
} wordeco_status;

typedef enum wordeco_method {
  WORDECO_METHOD_BRUTE = 0,
  WORDECO_METHOD_GENERATE = 1,
  WORDECO_METHOD_STATES = 2,
  WORDECO_METHOD_TREE = 3,
  WORDECO_METHOD_FORMULA = 4,
  WORDECO_METHOD_GF = 5
} wordeco_method;

typedef enum wordeco_format {
  WORDECO_FORMAT_TABLE = 0,
  WORDECO_FORMAT_CSV = 1,
  WORDECO_FORMAT_JSON = 2
} wordeco_format;

/* Lift the brute-force budget of 10^9 candidate words. */
#define WORDECO_FLAG_FORCE 1u
/* Evaluate published formulas exactly as printed, without corrections. */
#define WORDECO_FLAG_AS_PRINTED 2u
/* eco-matrix: use the rule that separates first and repeated last letters. */
#define WORDECO_FLAG_DETAILED 4u

/* Alphabet size meaning "no cap" for wordeco_eco_matrix. */
#define WORDECO_UNCAPPED 0u

typedef struct wordeco_pattern_set wordeco_pattern_set;
typedef struct wordeco_table wordeco_table;

WORDECO_API const char* wordeco_version(void);
WORDECO_API const char* wordeco_status_string(wordeco_status status);
WORDECO_API const char* wordeco_last_error(void);
WORDECO_API void wordeco_string_free(char* s);

WORDECO_API wordeco_status wordeco_method_from_name(const char* name, wordeco_method* out);

/* Pattern sets */
WORDECO_API wordeco_status wordeco_pattern_set_parse(const char* text, wordeco_pattern_set** out);
WORDECO_API void wordeco_pattern_set_free(wordeco_pattern_set* set);
WORDECO_API size_t wordeco_pattern_set_size(const wordeco_pattern_set* set);
WORDECO_API wordeco_status wordeco_pattern_set_to_string(const wordeco_pattern_set* set, char** out);

/* Words */
WORDECO_API wordeco_status wordeco_reduce(const char* word, char** out);
WORDECO_API wordeco_status wordeco_is_reduced(const char* word, int* out);
WORDECO_API wordeco_status wordeco_order_isomorphic(const char* u, const char* v, int* out);
/* All relabellings of a reduced word onto k-subsets of {1..m}; one column "word". */
WORDECO_API wordeco_status wordeco_embeddings(const char* word, unsigned m, wordeco_table** out);

/* Containment. `witness` receives up to `witness_capacity` 1-based positions
 * of the occurrence found; `witness_length` receives its full length (0 when
 * the word avoids the pattern). Both may be NULL. */
WORDECO_API wordeco_status wordeco_check(const char* pattern, const char* word, int* contains,
                                         size_t* witness, size_t witness_capacity,
                                         size_t* witness_length);
WORDECO_API wordeco_status wordeco_avoids(const wordeco_pattern_set* set, const char* word, int* out);

/* Sons of an avoiding reduced word; columns "son", "k". */
WORDECO_API wordeco_status wordeco_sons(const char* word, const wordeco_pattern_set* set, unsigned m,
                                        wordeco_table** out);

/* |W_n^(m)(T)| as a decimal string. */
WORDECO_API wordeco_status wordeco_count(const wordeco_pattern_set* set, unsigned m, unsigned n,
                                         wordeco_method method, unsigned flags, char** out);

/* alpha(n, k) for 0 <= n, k <= n_max; columns "n", "0", ..., "n_max". */
WORDECO_API wordeco_status wordeco_alpha_table(const wordeco_pattern_set* set, unsigned n_max,
                                               unsigned m, wordeco_method method, unsigned flags,
                                               wordeco_table** out);

/* Label counts per level of the generating tree of a class ("1-12,2-21",
 * "1-21,2-12" or "1-11,1-12"); columns "level" then one per label. */
WORDECO_API wordeco_status wordeco_eco_matrix(const char* class_id, unsigned m, unsigned n_max,
                                              unsigned flags, wordeco_table** out);

/* Coefficients of the generating function of a class up to x^order; columns
 * "n", "coefficient". Adjustments to published summands appear as notes. */
WORDECO_API wordeco_status wordeco_gf(const char* class_id, unsigned m, unsigned order, unsigned flags,
                                      wordeco_table** out);

/* Cross-checks every applicable method on each cell (T, m, n), 1 <= m <= m_max,
 * 0 <= n <= n_max. `sets` may be NULL to use the default twelve classes. */
WORDECO_API wordeco_status wordeco_verify(const char* const* sets, size_t set_count, unsigned m_max,
                                          unsigned n_max, unsigned flags, wordeco_table** out,
                                          size_t* mismatches);

/* Tables */
WORDECO_API size_t wordeco_table_columns(const wordeco_table* table);
WORDECO_API size_t wordeco_table_rows(const wordeco_table* table);
WORDECO_API const char* wordeco_table_column_name(const wordeco_table* table, size_t column);
WORDECO_API const char* wordeco_table_cell(const wordeco_table* table, size_t row, size_t column);
WORDECO_API size_t wordeco_table_note_count(const wordeco_table* table);
WORDECO_API const char* wordeco_table_note(const wordeco_table* table, size_t index);
WORDECO_API wordeco_status wordeco_table_render(const wordeco_table* table, wordeco_format format,
                                                char** out);
WORDECO_API void wordeco_table_free(wordeco_table* table);

#ifdef __cplusplus
}
#endif

#endif /* WORDECO_WORDECO_H */
