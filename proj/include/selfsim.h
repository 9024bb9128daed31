/* selfsim — exact-arithmetic decisions for self-similar digit sets.
 *
 * C API: opaque problem handles plus status codes.  Every function that can
 * fail returns ss_status; SS_OK means success.  Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * ss_string_free().  On failure, ss_last_error() carries a thread-local
 * message for the most recent failing call.
 */

#ifndef SELFSIM_H
#define SELFSIM_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SELFSIM_API __declspec(dllexport)
#else
#define SELFSIM_API __attribute__((visibility("default")))
#endif

typedef enum ss_status {
  SS_OK = 0,
  SS_ERROR_PARSE = 1,
  SS_ERROR_DEGENERATE = 2,
  SS_ERROR_MIXED_RADICALS = 3,
  SS_ERROR_DIVISION_BY_ZERO = 4,
  SS_ERROR_NOT_APPLICABLE = 5,
  SS_ERROR_ENUMERATION_GUARD = 6,
  SS_ERROR_BOUND_EXCEEDED = 7,
  SS_ERROR_INVALID_ARGUMENT = 8,
  SS_ERROR_INTERNAL = 9
} ss_status;

typedef enum ss_verdict {
  SS_POSITIVE_MEASURE = 0,
  SS_MEASURE_ZERO = 1,
  SS_VERDICT_UNKNOWN = 2
} ss_verdict;

typedef struct ss_problem ss_problem;

SELFSIM_API const char *ss_version(void);
SELFSIM_API const char *ss_status_name(ss_status status);
SELFSIM_API const char *ss_last_error(void);
SELFSIM_API void ss_string_free(char *text);

/* Digit-set problems.  digits_csv uses the scalar syntax
 * "a", "a/b", "a/b+c/e*sqrt(d)", comma separated, e.g. "0,1,8,9" or
 * "0,1,2,sqrt(2)".  The implied ratio is 1/|digits|; ss_problem_set_ratio
 * installs an explicit rational ratio in (0,1). */
SELFSIM_API ss_status ss_problem_from_digits(const char *digits_csv,
                                             ss_problem **out);
SELFSIM_API ss_status ss_problem_from_multigeometric(const char *k_csv,
                                                     int base,
                                                     ss_problem **out);
SELFSIM_API ss_status ss_problem_set_ratio(ss_problem *problem,
                                           const char *ratio);
SELFSIM_API ss_status ss_problem_digits(const ss_problem *problem,
                                        char **digits_csv);
SELFSIM_API void ss_problem_free(ss_problem *problem);

/* Verdict with a JSON certificate document.  n_max bounds the collision and
 * vanishing-sum searches (0 = default 8); k_max bounds the per-frequency
 * level search (0 = heuristic).  levels > 0 embeds that many interval
 * levels in the document. */
SELFSIM_API ss_status ss_decide(const ss_problem *problem, int n_max,
                                int k_max, int levels, ss_verdict *verdict,
                                char **json);

/* Level-interval exports for rational digit sets. */
SELFSIM_API ss_status ss_intervals_csv(const ss_problem *problem, int levels,
                                       char **csv);
SELFSIM_API ss_status ss_render_svg(const ss_problem *problem, int levels,
                                    char **svg);

/* Achievement-set classification of the multigeometric series
 * (k_1..k_m; 1/base). */
SELFSIM_API ss_status ss_multigeo_classify(const char *k_csv, int base,
                                           int n_max, int k_max, char **json);

/* Planar IFS projections; points_text is "a1,b1:a2,b2:...". */
SELFSIM_API ss_status ss_ifs_decide(const char *points_text, const char *u,
                                    int n_max, int k_max, ss_verdict *verdict,
                                    char **json);
SELFSIM_API ss_status ss_ifs_sweep(const char *points_text, int height,
                                   int n_max, int k_max, char **json);

/* Candidates for positive measure without residue completeness. */
SELFSIM_API ss_status ss_search(int size, int bound, int n_max, int k_max,
                                char **json);

/* Recomputes the certificate of a decide-style report; *accepted is 1 when
 * the certificate validates. */
SELFSIM_API ss_status ss_verify(const char *report_json, int *accepted,
                                char **json);

#ifdef __cplusplus
}
#endif

#endif /* SELFSIM_H */
