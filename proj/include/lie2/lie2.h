#ifndef LIE2_H
#define LIE2_H

#include <stddef.h>
#include <stdint.h>

#if defined(LIE2_BUILDING_LIBRARY)
#define LIE2_API __attribute__((visibility("default")))
#else
#define LIE2_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lie2_status {
    LIE2_OK = 0,
    LIE2_ERR_USAGE = 1,     /* bad arguments or malformed input */
    LIE2_ERR_DOMAIN = 2,    /* mathematically undefined request */
    LIE2_ERR_RESOURCE = 3,  /* a configured search bound was exceeded */
    LIE2_ERR_INTERNAL = 4,  /* failed self-check */
    LIE2_ERR_MISMATCH = 5   /* a check or golden comparison failed; the document is still returned */
} lie2_status;

typedef struct lie2_field lie2_field;
typedef struct lie2_algebra lie2_algebra;
typedef struct lie2_super lie2_super;

/* Message of the last failing call on this thread; "" after a success. */
LIE2_API const char* lie2_last_error(void);
/* Frees strings returned through char** out parameters. */
LIE2_API void lie2_string_free(char* s);
LIE2_API const char* lie2_version(void);

/* Fields: "gf2", "gf4", ..., "gf2e<k>". Elements are bit vectors (bit i = coefficient of t^i). */
LIE2_API lie2_status lie2_field_new(const char* name, lie2_field** out);
LIE2_API void lie2_field_free(lie2_field* f);
LIE2_API lie2_status lie2_field_mul(const lie2_field* f, uint32_t a, uint32_t b, uint32_t* out);
LIE2_API lie2_status lie2_field_inv(const lie2_field* f, uint32_t a, uint32_t* out);
LIE2_API lie2_status lie2_field_format(const lie2_field* f, uint32_t a, char** out);

/* Lie algebras. */
LIE2_API lie2_status lie2_algebra_from_json(const char* json, lie2_algebra** out);
/* series: gl, sl, psl, o, o1, o2, o2_mod_c, tilde_o; derived < 0 and mod_center < 0 keep the series defaults. */
LIE2_API lie2_status lie2_algebra_classical(const char* field, const char* series, size_t n, int derived,
                                            int mod_center, lie2_algebra** out);
/* vect(1;n) or vect^(1)(1;n). */
LIE2_API lie2_status lie2_algebra_vect(const char* field, int n, int derived, lie2_algebra** out);
LIE2_API void lie2_algebra_free(lie2_algebra* g);
LIE2_API size_t lie2_algebra_dim(const lie2_algebra* g);
LIE2_API lie2_status lie2_algebra_to_json(const lie2_algebra* g, char** out);
/* *ok = 1 when the Lie axioms hold; *report (optional) receives a summary. */
LIE2_API lie2_status lie2_algebra_validate(const lie2_algebra* g, int* ok, char** report);
/* x, y, out: dim coordinates. */
LIE2_API lie2_status lie2_algebra_bracket(const lie2_algebra* g, const uint32_t* x, const uint32_t* y, uint32_t* out);
LIE2_API lie2_status lie2_algebra_derivation_dim(const lie2_algebra* g, size_t* out);

/* Lie superalgebras. */
LIE2_API lie2_status lie2_super_from_json(const char* json, lie2_super** out);
/* Names: kl, kl-printed, q-vect, k (parameter a = n); oo-II, oo-IPi, oo-PiPi (a|b); pe (a). */
LIE2_API lie2_status lie2_super_known(const char* field, const char* name, size_t a, size_t b, lie2_super** out);
/* Method-2 superization of vect^(1)(1;n) for the grading given by u = "c0,c1,..." (or "0101"). */
LIE2_API lie2_status lie2_super_vect(const char* field, int n, const char* u, lie2_super** out);
/* Method-2 superization of g for the idempotent derivation U (row-major dim x dim, column j = U(e_j)). */
LIE2_API lie2_status lie2_super_superize(const lie2_algebra* g, const uint32_t* U, lie2_super** out);
LIE2_API void lie2_super_free(lie2_super* s);
LIE2_API size_t lie2_super_dim_even(const lie2_super* s);
LIE2_API size_t lie2_super_dim_odd(const lie2_super* s);
LIE2_API lie2_status lie2_super_to_json(const lie2_super* s, char** out);
LIE2_API lie2_status lie2_super_validate(const lie2_super* s, int* ok, char** report);
LIE2_API lie2_status lie2_super_fingerprint(const lie2_super* s, char** out);
/* 1 when the structure constants and squares coincide. */
LIE2_API int lie2_super_equal(const lie2_super* a, const lie2_super* b);

/* Document runners. Each returns a JSON document with at least "ok" and "text" (and "csv" for
   tabular commands); LIE2_ERR_MISMATCH means the document reports a failed check. golden_dir may
   be NULL to skip golden comparisons. */
LIE2_API lie2_status lie2_run_classical(const char* field, const char* series, size_t n, int derived, int mod_center,
                                        char** doc);
/* Projection reps of the series with verification; enumerate != 0 also enumerates all idempotent
   derivations (bounded by limit cases) and cross-references their fingerprints. */
LIE2_API lie2_status lie2_run_gradings(const char* field, const char* series, size_t n, int enumerate, size_t limit,
                                       char** doc);
LIE2_API lie2_status lie2_run_gradings_json(const char* algebra_json, size_t limit, char** doc);
/* grading_json: {"algebra": <structure-constant document>, "U": [[...], ...]} (rows of U). */
LIE2_API lie2_status lie2_run_superize(const char* grading_json, char** doc);
LIE2_API lie2_status lie2_run_known(const char* field, const char* name, size_t a, size_t b, char** doc);
LIE2_API lie2_status lie2_run_tables(int n, const char* golden_dir, char** doc);
/* samples = 0: exhaustive. */
LIE2_API lie2_status lie2_run_verify_charpoly(const char* field, int n, size_t samples, uint64_t seed, char** doc);
/* mode: "grade", "charpoly", "sierpinski". */
LIE2_API lie2_status lie2_run_vect(const char* field, int n, const char* u, const char* mode, char** doc);
LIE2_API lie2_status lie2_run_sierpinski(int n, const char* golden_dir, char** doc);

#ifdef __cplusplus
}
#endif

#endif
