/* C interface to the extremal set-family engine.
 *
 * All functions returning char** allocate the string with the library's
 * allocator; release it with spn_string_free. Families are opaque handles
 * released with spn_family_free. On failure a human-readable message is
 * available from spn_last_error (thread local) until the next call.
 */
#ifndef SPERNER_H
#define SPERNER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  ifdef SPN_BUILDING_SHARED
#    define SPN_API __declspec(dllexport)
#  else
#    define SPN_API __declspec(dllimport)
#  endif
#else
#  define SPN_API __attribute__((visibility("default")))
#endif

typedef enum spn_status {
  SPN_OK = 0,
  SPN_ERROR_ARGUMENT = 1, /* bad parameters, malformed documents, unknown names */
  SPN_ERROR_INTERNAL = 2
} spn_status;

typedef struct spn_family spn_family;

SPN_API const char* spn_version(void);
SPN_API const char* spn_last_error(void);

/* Family documents: {"n":..,"kind":"subsets","sets":[[..],..]} or
 * {"n":..,"kind":"compositions","p":..,"compositions":[[[..],..],..]}. */
SPN_API spn_status spn_family_parse(const char* json_text, spn_family** out);
SPN_API spn_status spn_family_load(const char* path, spn_family** out);
SPN_API spn_status spn_family_to_json(const spn_family* fam, char** out_text);
SPN_API void spn_family_free(spn_family* fam);
SPN_API void spn_string_free(char* text);

/* Commands emit a canonical JSON report in *out_text (a family document for
 * spn_construct, CSV for spn_attain_sweep). Where out_verdict is accepted it
 * may be NULL; the value is 0 for holds/attained, 1 for violated/unattained,
 * and for spn_search 3 when the budget ran out before optimality was proven.
 * Theorem names: sperner erdos meshalkin e-m gst e-g unifying m-g rfamily. */
SPN_API spn_status spn_bound(const char* theorem, int n, int p, int r, const char* scope,
                             char** out_text);
SPN_API spn_status spn_check(const spn_family* fam, const char* theorem, int r,
                             int* out_verdict, char** out_text);
SPN_API spn_status spn_lym(const spn_family* fam, const char* theorem, int r, int* out_verdict,
                           char** out_text);
SPN_API spn_status spn_construct(const char* kind, int n, int p, int r, char** out_text);
SPN_API spn_status spn_search(const char* theorem, int n, int p, int r, long long budget_ms,
                              int* out_verdict, char** out_text);
SPN_API spn_status spn_separate_count(int n, const int* shape, int shape_len, char** out_text);
SPN_API spn_status spn_separate_max(const spn_family* fam, int sampled, uint64_t samples,
                                    uint64_t seed, char** out_text);
SPN_API spn_status spn_attain(int n, int p, int r, int* out_verdict, char** out_text);
SPN_API spn_status spn_attain_sweep(int r_lo, int r_hi, int p_lo, int p_hi, int n_lo, int n_hi,
                                    char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* SPERNER_H */
