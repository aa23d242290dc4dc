/* permdiam C API: permutation-group diametry behind opaque handles.
 *
 * Every function that can fail returns a pd_status; the per-thread message
 * text is available from pd_last_error(). Output strings are heap-allocated,
 * owned by the caller, and released with pd_string_free().
 */
#ifndef PERMDIAM_H
#define PERMDIAM_H

#include <stdint.h>

#if defined(_WIN32)
#define PERMDIAM_API __declspec(dllexport)
#else
#define PERMDIAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pd_group pd_group;

typedef enum pd_status {
  PD_OK = 0,
  PD_ERROR = 1,          /* unexpected internal failure */
  PD_PARSE_ERROR = 2,    /* malformed description, word, or label */
  PD_DOMAIN_ERROR = 3,   /* structurally invalid request */
  PD_CAPACITY_ERROR = 4  /* a configured budget was exceeded */
} pd_status;

/* Message for the last failing call on this thread; "" when none. */
PERMDIAM_API const char* pd_last_error(void);

/* Overrides the process-wide budgets; any zero keeps the current value.
 * Defaults: 8 GiB of BFS state, enumeration cap 10^7, 5*10^7 generating
 * sets for the worst-case search. PERMDIAM_STATE_BYTES / PERMDIAM_ENUM_CAP
 * set the initial defaults from the environment. */
PERMDIAM_API void pd_set_budget(uint64_t state_bytes, uint64_t enum_cap,
                                uint64_t max_gen_sets);

/* Group descriptions: "label:<corpus-label>" (see pd_label_help) or inline
 * "[name:][n=DEGREE;]a=(0 1 2),b=(3 4)"; unlabelled generators are named
 * g0, g1, ...; the degree defaults to one past the largest point named. */
PERMDIAM_API pd_status pd_group_create(const char* description, pd_group** out);
PERMDIAM_API void pd_group_destroy(pd_group* g);

PERMDIAM_API int pd_group_degree(const pd_group* g);
PERMDIAM_API pd_status pd_group_order(pd_group* g, char** out_decimal);

/* Reports. json != 0 selects the structured format, otherwise line-oriented
 * key=value records. */
PERMDIAM_API pd_status pd_group_info(pd_group* g, int json, char** out);
PERMDIAM_API pd_status pd_diameter(pd_group* g, int json, char** out);
PERMDIAM_API pd_status pd_worst_diameter(pd_group* g, int json, char** out);
PERMDIAM_API pd_status pd_growth(pd_group* g, uint64_t radius, int json, char** out);

/* method: "schreier" | "milnor" | "soluble" | "direct-product".
 * target is disjoint-cycle notation at the group's degree. */
PERMDIAM_API pd_status pd_synthesize(pd_group* g, const char* target, const char* method,
                                     int json, char** out);

/* Re-validates a certificate in the JSON form emitted by pd_synthesize:
 * the word must evaluate to the element within the asserted bound. */
PERMDIAM_API pd_status pd_certificate_check(pd_group* g, const char* cert_json, int* valid);

PERMDIAM_API pd_status pd_invariants(pd_group* g, int json, char** out);

/* context: "abstract" | "transitive" | "primitive" | "soluble" | "nilpotent" */
PERMDIAM_API pd_status pd_bounds(pd_group* g, const char* context, int json, char** out);

/* Emits the full inline description of a corpus group. */
PERMDIAM_API pd_status pd_construct(const char* label, char** out_description);
PERMDIAM_API pd_status pd_label_help(char** out);

/* suite: "paper-numbers" | "lemmas" | "corpus"; instances scales the
 * randomized lemma suite (0 = default 500). *failures receives the number
 * of failed checks. */
PERMDIAM_API pd_status pd_verify(const char* suite, uint64_t instances, char** out_report,
                                 int* failures);

PERMDIAM_API void pd_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PERMDIAM_H */
