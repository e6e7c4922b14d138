#ifndef NALEN_H
#define NALEN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NALEN_API __declspec(dllexport)
#else
#define NALEN_API __attribute__((visibility("default")))
#endif

/* status codes */
#define NALEN_OK 0
#define NALEN_PARSE_ERROR 1
#define NALEN_DIVISION_BY_ZERO 2
#define NALEN_FIELD_MISMATCH 3
#define NALEN_DIMENSION_MISMATCH 4
#define NALEN_INDEX_OUT_OF_RANGE 5
#define NALEN_RESOURCE_LIMIT 6
#define NALEN_NOT_RESTRICTED_FORM 7
#define NALEN_WORD_TOO_SHORT 8
#define NALEN_DOMAIN_ERROR 9
#define NALEN_NOT_FINITE_FIELD 10
#define NALEN_ALREADY_UNITAL 11
#define NALEN_INTERNAL_CONSISTENCY 12
#define NALEN_INVALID_ARGUMENT 13
#define NALEN_UNKNOWN_ERROR 99

typedef struct nalen_algebra nalen_algebra;

NALEN_API const char* nalen_version(void);
NALEN_API const char* nalen_status_name(int status);
/* message of the last failed call on this thread */
NALEN_API const char* nalen_last_error(void);
NALEN_API void nalen_string_free(char* s);

NALEN_API int nalen_algebra_parse(const char* text, nalen_algebra** out);
NALEN_API int nalen_algebra_load(const char* path, nalen_algebra** out);
/* {"name": "z2n"|"aflex"|"aalt"|"spin"|"matrix"|"chain3"|"nil3"|"cd", "n": 3,
    "field": "rational"|"gf 2", "hull": false, "level": 2, "gammas": ["-1", "-1"],
    "twist": "none"|"left"|"right"|"both"} */
NALEN_API int nalen_algebra_example(const char* request_json, nalen_algebra** out);
NALEN_API int nalen_algebra_hull(const nalen_algebra* a, nalen_algebra** out);
NALEN_API void nalen_algebra_free(nalen_algebra* a);
NALEN_API int nalen_algebra_dim(const nalen_algebra* a, size_t* out);
NALEN_API int nalen_algebra_print(const nalen_algebra* a, char** text);
NALEN_API int nalen_algebra_equal(const nalen_algebra* a, const nalen_algebra* b, int* out);

/* Reports are JSON documents. Options are JSON objects; NULL or "" means defaults.
   Common keys: "seed", "samples", "threads", "set" ("basis" | "1,2"), "set_vectors"
   (one coordinate vector per line), "mode" ("general" | "mixing" | "auto"),
   "max_level", "budget". */
NALEN_API int nalen_classify(const nalen_algebra* a, const char* options_json, char** report_json);
NALEN_API int nalen_diffseq(const nalen_algebra* a, const char* options_json, char** report_json);
NALEN_API int nalen_exact_length(const nalen_algebra* a, const char* options_json, char** report_json);
NALEN_API int nalen_bounds(const nalen_algebra* a, const char* options_json, char** report_json);
/* "word": "((1 2) 1)", "variant": "alt" | "flex"; a may be NULL, otherwise the
   rewrite is verified on the generator set */
NALEN_API int nalen_canonical(const nalen_algebra* a, const char* options_json, char** report_json);
/* random generator sets: "trials", "size", "seed" */
NALEN_API int nalen_search(const nalen_algebra* a, const char* options_json, char** report_json);
NALEN_API int nalen_infer_unity(const nalen_algebra* a, char** report_json);

/* "alt_min_dim", "alt_max_length", "flex_min_dim", "flex_max_length",
   "flex_max_length_inverse", "quick_alt", "quick_flex", "alt_word_dim" (uses k) */
NALEN_API int nalen_formula(const char* name, uint64_t n, uint64_t k, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif
