#ifndef STIRFOREST_H
#define STIRFOREST_H

/* C interface to the stirforest library. Every call reports failure through
 * an sf_status; the message of the last failure is kept on the context.
 * Results that are text come back as sf_text handles owned by the caller. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SF_BUILDING_LIBRARY)
#    define SF_API __declspec(dllexport)
#  else
#    define SF_API __declspec(dllimport)
#  endif
#else
#  define SF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
  SF_OK = 0,
  SF_DONE = 1,              /* cursor exhausted */
  SF_ERR_ARGUMENT = 2,      /* null pointer, unknown name, bad flag value */
  SF_ERR_PARSE = 3,         /* malformed word, forest, set or polynomial text */
  SF_ERR_DOMAIN = 4,        /* precondition on a value violated */
  SF_ERR_LIMIT = 5,         /* resource ceiling refused the request */
  SF_ERR_INTERNAL = 6,      /* an invariant failed; always a bug */
  SF_ERR_MEMORY = 7
} sf_status;

typedef enum sf_format { SF_FORMAT_TEXT = 0, SF_FORMAT_JSON = 1 } sf_format;

typedef enum sf_route { SF_ROUTE_AP = 0, SF_ROUTE_EXC_CYC = 1, SF_ROUTE_EGF = 2 } sf_route;

typedef enum sf_gamma_by { SF_GAMMA_DECOMPOSITION = 0, SF_GAMMA_CENSUS = 1 } sf_gamma_by;

typedef enum sf_kind { SF_KIND_PERMS = 0, SF_KIND_FORESTS = 1 } sf_kind;

typedef enum sf_filter {
  SF_FILTER_NONE = 0,
  SF_FILTER_BAR = 1,
  SF_FILTER_HAT = 2,
  SF_FILTER_TILDE = 3,  /* words starting with their minimum; single-tree forests */
  SF_FILTER_STAR = 4    /* forests only: no young and no removable leaves */
} sf_filter;

typedef enum sf_input_kind { SF_INPUT_AUTO = 0, SF_INPUT_WORD = 1, SF_INPUT_FOREST = 2 } sf_input_kind;

typedef struct sf_context sf_context;
typedef struct sf_text sf_text;
typedef struct sf_cursor sf_cursor;
typedef struct sf_report_list sf_report_list;

SF_API const char* sf_version(void);
SF_API const char* sf_status_name(sf_status status);

SF_API sf_status sf_context_create(sf_context** out);
SF_API void sf_context_destroy(sf_context* ctx);
/* Ceilings for exhaustive work; zero keeps the current value. */
SF_API sf_status sf_context_set_limits(sf_context* ctx, uint64_t max_objects, unsigned max_perm_n);
/* Message of the most recent failure on ctx, "" after a success. */
SF_API const char* sf_last_error(const sf_context* ctx);

SF_API const char* sf_text_data(const sf_text* text);
SF_API size_t sf_text_size(const sf_text* text);
SF_API void sf_text_destroy(sf_text* text);

/* which: 'A' the polynomial, 'a' and 'b' its decomposition parts (x*b for
 * 'b'), 'c' the tree polynomial. Emits "[1,10,4]". */
SF_API sf_status sf_poly(sf_context* ctx, unsigned n, unsigned k, char which, sf_route route, sf_text** out);
/* which: 'a', 'b' or 'c'. Emits {"center":2,"gamma":[1,5]}, padded to
 * floor(center/2)+1 entries. */
SF_API sf_status sf_gamma(sf_context* ctx, unsigned n, unsigned k, char which, sf_gamma_by by, sf_text** out);
/* Distribution of a statistic over a family, by name ("Qbar", "lleaf-si"). */
SF_API sf_status sf_distribution(sf_context* ctx, const char* family, const char* statistic, unsigned n, unsigned k,
                                 sf_text** out);

/* poly is the dense text form. Each emits a JSON object. */
SF_API sf_status sf_shape(sf_context* ctx, const char* poly, size_t center, sf_text** out);
SF_API sf_status sf_decompose(sf_context* ctx, const char* poly, size_t center, sf_text** out);
SF_API sf_status sf_gamma_expand(sf_context* ctx, const char* poly, size_t center, sf_text** out);

/* Statistic record of a k-Stirling word or a forest. */
SF_API sf_status sf_stats(sf_context* ctx, unsigned k, const char* input, sf_input_kind as, sf_format format,
                          sf_text** out);

/* name: xi xi-inv chi chi-inv zeta zeta-inv phi phi-set theta theta-prime psi
 * alpha beta gamma gamma-prime. x is used by phi and psi (has_x must be
 * set); set by phi-set and, as the mark set, by gamma. */
SF_API sf_status sf_map(sf_context* ctx, const char* name, unsigned k, const char* input, int has_x, int32_t x,
                        const char* set, sf_text** out);

/* limit = 0 means no limit. */
SF_API sf_status sf_enumerate_open(sf_context* ctx, unsigned n, unsigned k, sf_kind kind, sf_filter filter,
                                   uint64_t limit, sf_format format, sf_cursor** out);
/* SF_OK with a new item in *out, or SF_DONE. */
SF_API sf_status sf_enumerate_next(sf_cursor* cursor, sf_text** out);
SF_API void sf_enumerate_close(sf_cursor* cursor);

/* suites: comma-separated names, or NULL / "" for all. */
SF_API sf_status sf_verify(sf_context* ctx, unsigned n_max, unsigned k_max, const char* suites, sf_report_list** out);
SF_API size_t sf_report_count(const sf_report_list* list);
SF_API size_t sf_report_failures(const sf_report_list* list);
SF_API int sf_report_passed(const sf_report_list* list, size_t index);
/* Borrowed strings, valid until the list is destroyed. */
SF_API const char* sf_report_json(const sf_report_list* list, size_t index);
SF_API const char* sf_report_text(const sf_report_list* list, size_t index);
SF_API void sf_report_list_destroy(sf_report_list* list);

#ifdef __cplusplus
}
#endif

#endif
