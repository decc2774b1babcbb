/*
 * C interface to the schubert library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Every function returns an sch_status; on failure a
 * message is available from sch_last_error() on the same thread until the
 * next call. Strings returned through char** out-parameters are allocated by
 * the library and must be released with sch_string_free().
 */
#ifndef SCHUBERT_SCHUBERT_H
#define SCHUBERT_SCHUBERT_H

#include <stdint.h>

#if defined(_WIN32)
#define SCH_API __declspec(dllexport)
#else
#define SCH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sch_status {
  SCH_OK = 0,
  SCH_E_INVALID_ARGUMENT = 1, /* null pointer, bad enum value */
  SCH_E_PARSE = 2,            /* malformed type string or word */
  SCH_E_CONFIG = 3,           /* inadmissible family/rank */
  SCH_E_BUDGET = 4,           /* enumeration budget exceeded */
  SCH_E_DOMAIN = 5,           /* argument outside an operation's domain */
  SCH_E_INTERNAL = 6
} sch_status;

typedef enum sch_format { SCH_FORMAT_TEXT = 0, SCH_FORMAT_JSON = 1, SCH_FORMAT_TSV = 2 } sch_format;

typedef enum sch_filter {
  SCH_FILTER_ALL = 0,
  SCH_FILTER_PASS = 1,
  SCH_FILTER_FAIL = 2,
  SCH_FILTER_PALINDROMIC = 3
} sch_filter;

typedef struct sch_options {
  uint64_t budget;   /* max Weyl group elements enumerated */
  sch_format format;
  int t_grading;     /* nonzero: render q as t^2 in text output */
  sch_filter filter; /* scan only */
  unsigned workers;  /* scan only; 0 = hardware concurrency */
} sch_options;

typedef struct sch_rootsystem sch_rootsystem;
typedef struct sch_element sch_element;

/* budget 10^6, text, q-grading, all, 1 worker */
SCH_API void sch_options_init(sch_options* options);

SCH_API const char* sch_version(void);
SCH_API const char* sch_status_name(sch_status status);
SCH_API const char* sch_last_error(void);
SCH_API void sch_string_free(char* s);

/* "A3", "d4", "G2" (case-insensitive) */
SCH_API sch_status sch_rootsystem_create(const char* type, sch_rootsystem** out);
SCH_API void sch_rootsystem_free(sch_rootsystem* rs);
SCH_API sch_status sch_rootsystem_rank(const sch_rootsystem* rs, int* rank);
SCH_API sch_status sch_rootsystem_num_positive_roots(const sch_rootsystem* rs, int* count);
/* e.g. "1-2, 2-3, 2-4" */
SCH_API sch_status sch_rootsystem_labelling(const sch_rootsystem* rs, char** out);

/* Words are digit strings ("2142132"), comma lists ("1,2,1"), or "" / "e". */
SCH_API sch_status sch_element_from_word(const sch_rootsystem* rs, const char* word, sch_element** out);
SCH_API void sch_element_free(sch_element* w);
SCH_API sch_status sch_element_length(const sch_element* w, int* length);
SCH_API sch_status sch_element_reduced_word(const sch_element* w, char** out);
SCH_API sch_status sch_bruhat_leq(const sch_element* x, const sch_element* w, int* result);

/* Compares the three expressions for the Poincare polynomial of G/B;
 * *equal receives 1 when they agree. */
SCH_API sch_status sch_identity(const sch_rootsystem* rs, const sch_options* options, char** out, int* equal);

/* Full analysis of X(w) for the element given by `word`; *pass receives the
 * necessary-condition verdict. */
SCH_API sch_status sch_report(const sch_rootsystem* rs, const char* word, const sch_options* options, char** out,
                              int* pass);

/* Analyzes every element of W. In type A, *consistent is 0 when the
 * necessary condition, palindromicity and the pattern oracle disagree. */
SCH_API sch_status sch_scan(const sch_rootsystem* rs, const sch_options* options, char** out, int* consistent);

/* Positive roots, heights, exponents and |W|; TSV (also for TEXT) or JSON. */
SCH_API sch_status sch_table(const sch_rootsystem* rs, const sch_options* options, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SCHUBERT_SCHUBERT_H */
