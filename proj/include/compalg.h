/*
 * compalg — exact-arithmetic composition algebras, triality and the
 * Freudenthal magic square.
 *
 * C interface to the shared library: opaque handles, integer error codes,
 * JSON strings for structured data. Every function returns 0 on success;
 * on failure the returned code identifies the error class and
 * compalg_last_error() describes it. Strings returned through char** are
 * owned by the caller and must be released with compalg_string_free().
 */

#ifndef COMPALG_H
#define COMPALG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define COMPALG_API __declspec(dllexport)
#else
#define COMPALG_API __attribute__((visibility("default")))
#endif

typedef struct compalg_algebra compalg_algebra;
typedef struct compalg_lie compalg_lie;

COMPALG_API const char* compalg_version(void);

/* Error code and message of the last failing call on this thread. */
COMPALG_API int compalg_last_error_code(void);
COMPALG_API const char* compalg_last_error(void);
COMPALG_API const char* compalg_error_name(int code);

COMPALG_API void compalg_string_free(char* s);
COMPALG_API void compalg_algebra_free(compalg_algebra* a);
COMPALG_API void compalg_lie_free(compalg_lie* l);

/*
 * Construct an algebra. kind is one of:
 *   ground | etale | cd | split-cayley | quaternions | para | petersson |
 *   split-okubo | okubo-sl3 | okubo-j | okubo-char3 | char3-dim2 | unitalize
 * params_json carries the inputs:
 *   field      field spec string ("q", "gf:7", "ratfun:gf:3:t", ...) or
 *              the JSON field descriptor object
 *   mu, alpha, beta, lambda, omega   scalar expressions, as needed
 *   in         input algebra (JSON object) for cd/para/petersson/unitalize
 *   autom      "cyclic" | "grading" | "identity" (petersson)
 *   point      coordinate array of scalar expressions (unitalize)
 *   check_cube bool (char3-dim2)
 */
COMPALG_API int compalg_build(const char* kind, const char* params_json, compalg_algebra** out);

COMPALG_API int compalg_algebra_from_json(const char* jsn, compalg_algebra** out);
COMPALG_API int compalg_algebra_to_json(const compalg_algebra* a, char** out_json);

/* layout: "canonical" | "figure1" | "figure2" */
COMPALG_API int compalg_table(const compalg_algebra* a, const char* layout, char** out_text);

/*
 * Verification suites: composition | hurwitz | symmetric | associative |
 * commutative | flexible. options_json: {"mode":"symbolic"|"exhaustive",
 * "cap":N}. The report JSON always carries "pass" and, on failure, a
 * "witness" string.
 */
COMPALG_API int compalg_verify(const compalg_algebra* a, const char* suite,
                               const char* options_json, char** report_json);

/* {"matrix": [[...]], "verified": true} on success */
COMPALG_API int compalg_split_basis(const compalg_algebra* a, unsigned long long budget,
                                    char** result_json);

/* point_json: array of scalar expressions of length dim */
COMPALG_API int compalg_unitalize(const compalg_algebra* a, const char* point_json,
                                  compalg_algebra** out);

/* which: "so3" (q only) | "so4" (p and q); coordinate arrays as above */
COMPALG_API int compalg_rotation(const compalg_algebra* a, const char* which, const char* p_json,
                                 const char* q_json, char** matrix_json);

/* what: "dim" | "fixed-dim" | "verify" */
COMPALG_API int compalg_triality(const compalg_algebra* a, const char* what, char** report_json);

/*
 * Magic square. options_json:
 *   field       spec string or descriptor (required)
 *   row, col    "1" | "2" | "4" | "8" | "okubo8"; omit both for the 4x4
 *               dimension grid
 *   flavor      "para" | "okubo-mix" (grid mode, default para)
 *   jacobi      "full" | "sample:N:SEED" (single entry mode)
 *   invariants  bool
 *   jobs        worker count, 0 = hardware
 * Report: {"dim":N, ...} or {"dims":[[...]]}.
 */
COMPALG_API int compalg_magic(const char* options_json, char** report_json);

/* g(S,S') as a handle, for export or direct checks */
COMPALG_API int compalg_magic_entry(const char* options_json, compalg_lie** out);

COMPALG_API int compalg_lie_from_json(const char* jsn, compalg_lie** out);
COMPALG_API int compalg_lie_to_json(const compalg_lie* l, char** out_json);

/* options_json: {"mode":"full"} or {"mode":"sample","count":N,"seed":S,"jobs":J} */
COMPALG_API int compalg_lie_jacobi(const compalg_lie* l, const char* options_json,
                                   char** report_json);
COMPALG_API int compalg_lie_invariants(const compalg_lie* l, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* COMPALG_H */
