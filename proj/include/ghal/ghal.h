#ifndef GHAL_GHAL_H
#define GHAL_GHAL_H

/* C interface to the ghal library. Handles are opaque and owned by the
 * caller; strings returned through char** are owned by the caller and
 * released with ghal_string_free. On failure a function returns a nonzero
 * status, leaves its outputs untouched and records a message that
 * ghal_last_error returns until the next call on the same thread. Reports
 * are JSON objects. */

#include <stddef.h>

#if defined(_WIN32)
#define GHAL_API
#else
#define GHAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ghal_algebra ghal_algebra;
typedef struct ghal_module ghal_module;
typedef struct ghal_complex ghal_complex;

typedef enum ghal_status {
    GHAL_OK = 0,
    GHAL_ERR_INVALID_ARGUMENT = 1,
    GHAL_ERR_PARSE = 2,
    GHAL_ERR_PRECONDITION = 3,
    GHAL_ERR_CERTIFICATE = 4,
    GHAL_ERR_INCONSISTENCY = 5,
    GHAL_ERR_IO = 6,
    GHAL_ERR_INTERNAL = 7
} ghal_status;

typedef enum ghal_stabilization { GHAL_STABILIZATION_LEFT = 0, GHAL_STABILIZATION_RIGHT = 1 } ghal_stabilization;

GHAL_API const char* ghal_version(void);
GHAL_API const char* ghal_last_error(void);
GHAL_API const char* ghal_status_name(ghal_status status);
GHAL_API void ghal_string_free(char* s);

/* Algebras: {"field", "dim", "unit", "mult"}. */
GHAL_API ghal_status ghal_algebra_parse(const char* json, ghal_algebra** out);
GHAL_API ghal_status ghal_algebra_load(const char* path, ghal_algebra** out);
GHAL_API ghal_status ghal_algebra_to_json(const ghal_algebra* a, char** out);
GHAL_API ghal_status ghal_algebra_digest(const ghal_algebra* a, char** out);
GHAL_API ghal_status ghal_algebra_dim(const ghal_algebra* a, size_t* out);
GHAL_API void ghal_algebra_free(ghal_algebra* a);

/* Modules: {"algebra_digest", "dim", "action"}. */
GHAL_API ghal_status ghal_module_parse(const ghal_algebra* a, const char* json, ghal_module** out);
GHAL_API ghal_status ghal_module_load(const ghal_algebra* a, const char* path, ghal_module** out);
GHAL_API ghal_status ghal_module_free_of_rank(const ghal_algebra* a, size_t rank, ghal_module** out);
GHAL_API ghal_status ghal_module_to_json(const ghal_module* m, char** out);
GHAL_API ghal_status ghal_module_save(const ghal_module* m, const char* path);
GHAL_API ghal_status ghal_module_dim(const ghal_module* m, size_t* out);
GHAL_API void ghal_module_free(ghal_module* m);

/* Complexes: {"lo", "hi", "components", "differentials"}. */
GHAL_API ghal_status ghal_complex_parse(const ghal_algebra* a, const char* json, ghal_complex** out);
GHAL_API ghal_status ghal_complex_load(const ghal_algebra* a, const char* path, ghal_complex** out);
GHAL_API ghal_status ghal_complex_concentrated(const ghal_module* m, int degree, ghal_complex** out);
GHAL_API ghal_status ghal_complex_to_json(const ghal_complex* x, char** out);
GHAL_API ghal_status ghal_complex_save(const ghal_complex* x, const char* path);
GHAL_API void ghal_complex_free(ghal_complex* x);

/* Resolutions and Ext. */
GHAL_API ghal_status ghal_ext_dim(const ghal_module* m, const ghal_module* n, size_t degree, size_t* out);
GHAL_API ghal_status ghal_resolve(const ghal_module* m, size_t length, char** report);
GHAL_API ghal_status ghal_syzygy(const ghal_module* m, size_t j, ghal_module** out);
/* *out = pd M, or -1 when pd M exceeds `bound`. */
GHAL_API ghal_status ghal_proj_dim(const ghal_module* m, size_t bound, int* out);

/* Gorenstein layer; `gdim` is the declared Gorenstein dimension d. */
GHAL_API ghal_status ghal_gp_test(const ghal_module* m, size_t gdim, char** report);
GHAL_API ghal_status ghal_cosyzygy(const ghal_module* m, size_t gdim, ghal_module** out);
GHAL_API ghal_status ghal_complete_resolution(const ghal_module* m, size_t gdim, size_t window, ghal_complex** out,
                                              char** report);
GHAL_API ghal_status ghal_gp_approximation(const ghal_module* m, size_t gdim, ghal_module** gp, char** report);
GHAL_API ghal_status ghal_fpd_hull(const ghal_module* m, size_t gdim, ghal_module** hull, char** report);
GHAL_API ghal_status ghal_stable_hom(const ghal_module* m, const ghal_module* n, char** report);
GHAL_API ghal_status ghal_stable_iso(const ghal_module* m, const ghal_module* n, size_t gdim, size_t cap,
                                     char** report);
/* Z^0 of a complete resolution with radius max(window, gdim). */
GHAL_API ghal_status ghal_realize_module(const ghal_module* m, size_t gdim, size_t window, ghal_module** out,
                                         char** report);

/* Complexes. */
GHAL_API ghal_status ghal_realize_complex(const ghal_complex* x, size_t gdim, ghal_stabilization variant,
                                          ghal_module** out, char** report);
/* what: "validate", "acyclic", "contractible", "class", "dg" or "homotopy".
 * oracle: "projective", "gorenstein-projective", "finite-pd" or "all" (class, dg).
 * tilde: nonzero for the tilde class, zero for the degreewise class (class).
 * other: target complex (homotopy, required) or extra test-family member (dg, optional). */
GHAL_API ghal_status ghal_complex_check(const ghal_complex* x, const char* what, const char* oracle, int tilde,
                                        size_t gdim, const ghal_complex* other, char** report);
GHAL_API ghal_status ghal_witness_weak_triviality(const ghal_complex* x, size_t gdim, ghal_complex** f,
                                                  ghal_complex** c, char** report);

/* Corpus and verification suites: "frobenius-shift", "realization", "classes",
 * "contractibility" or "all". A failing check is reported in the report's
 * "overall" field, not through the status. */
GHAL_API ghal_status ghal_write_corpus(const char* dir);
GHAL_API ghal_status ghal_verify(const char* corpus_dir, const char* suite, char** report);

#ifdef __cplusplus
}
#endif

#endif
