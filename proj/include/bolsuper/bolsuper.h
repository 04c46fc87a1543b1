#ifndef BOLSUPER_H
#define BOLSUPER_H

/* C interface to the bolsuper library. Handles are opaque; every call that
 * can fail returns a bs_status and leaves a message for bs_last_error()
 * (per thread). Strings returned through char** are freed with
 * bs_string_free. Rationals cross the boundary as text "p" or "p/q". */

#include <stddef.h>

#if defined(_WIN32)
#define BS_API __declspec(dllexport)
#else
#define BS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    BS_OK = 0,
    BS_ERR_PRECONDITION = 1,
    BS_ERR_MISMATCH = 2,
    BS_ERR_PARSE = 3,
    BS_ERR_USAGE = 4,
    BS_ERR_INTERNAL = 5,
    BS_ERR_ARGUMENT = 6 /* null handle or out pointer, index out of range */
} bs_status;

typedef enum { BS_RICCI_DIRECT = 0, BS_RICCI_RESTRICTION = 1 } bs_ricci_method;

typedef struct bs_algebra bs_algebra;
typedef struct bs_form bs_form;

BS_API const char* bs_last_error(void);
BS_API void bs_string_free(char* s);

BS_API bs_status bs_algebra_parse(const char* text, bs_algebra** out);
BS_API bs_status bs_algebra_load(const char* path, bs_algebra** out);
BS_API bs_status bs_catalog_get(const char* key, bs_algebra** out);
BS_API void bs_algebra_free(bs_algebra* a);

BS_API bs_status bs_algebra_serialize(const bs_algebra* a, char** out);
BS_API bs_status bs_algebra_name(const bs_algebra* a, char** out);
BS_API bs_status bs_algebra_dims(const bs_algebra* a, size_t* even, size_t* odd);
/* 1 when both handles hold the same algebra, 0 otherwise. */
BS_API int bs_algebra_equal(const bs_algebra* a, const bs_algebra* b);

/* kind: lie, malcev, supertriple, lts, bol. */
BS_API bs_status bs_check(const bs_algebra* a, const char* kind, int* passed, size_t* witnesses);

BS_API bs_status bs_malcev_to_bol(const bs_algebra* a, bs_algebra** out);
BS_API bs_status bs_lie_to_lts(const bs_algebra* a, bs_algebra** out);
/* The Lie superalgebra B + H, H = IPS(B,B) or, if maximal, PS(B). */
BS_API bs_status bs_enveloping(const bs_algebra* a, int maximal, bs_algebra** out);
BS_API bs_status bs_center_dim(const bs_algebra* a, size_t* dim);

BS_API bs_status bs_killing(const bs_algebra* lie, bs_form** out);
BS_API bs_status bs_killing_ricci(const bs_algebra* bol, bs_ricci_method method, bs_form** out);
BS_API size_t bs_form_dim(const bs_form* f);
BS_API bs_status bs_form_entry(const bs_form* f, size_t i, size_t j, char** out);
BS_API int bs_form_equal(const bs_form* f, const bs_form* g);
BS_API bs_status bs_form_nondegenerate(const bs_form* f, int* nondegenerate);
BS_API void bs_form_free(bs_form* f);

/* Runs one command line (argv excludes the program name). */
BS_API bs_status bs_run_command(int argc, const char* const* argv, int* exit_code, char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif
