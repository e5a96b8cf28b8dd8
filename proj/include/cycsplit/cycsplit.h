/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C interface to the splitting-number library.
 *
 * Objects are opaque handles released with the matching *_destroy function.
 * Every fallible call returns a cycsplit_status; on failure the calling
 * thread's last-error slot holds a message and a machine-readable detail
 * (failing check name, offending value). Strings returned through char**
 * out-parameters are owned by the caller and released with
 * cycsplit_string_free. JSON records follow the library's shared formats:
 *   form   {"p": p, "degree": d, "terms": [[i, j, k, c], ...]}
 *   curve  {"p": p, "a4": a4, "a6": a6}
 *   point  "inf" or [x, y]
 */
#ifndef CYCSPLIT_H
#define CYCSPLIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CYCSPLIT_BUILDING)
#define CYCSPLIT_API __declspec(dllexport)
#else
#define CYCSPLIT_API __declspec(dllimport)
#endif
#else
#define CYCSPLIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cycsplit_status {
  CYCSPLIT_OK = 0,
  CYCSPLIT_INVALID_INPUT,
  CYCSPLIT_INVALID_FIELD,
  CYCSPLIT_FIELD_MISMATCH,
  CYCSPLIT_ZERO_INVERSE,
  CYCSPLIT_NOT_ON_CURVE,
  CYCSPLIT_SINGULAR_CURVE,
  CYCSPLIT_SINGULAR_POINT,
  CYCSPLIT_PRECISION_EXHAUSTED,
  CYCSPLIT_NON_RATIONAL_INTERSECTION,
  CYCSPLIT_COMMON_COMPONENT,
  CYCSPLIT_NONZERO_DEGREE,
  CYCSPLIT_NO_SUCH_ORDER,
  CYCSPLIT_INVALID_COVER,
  CYCSPLIT_ESSENTIALLY_RAMIFIED,
  CYCSPLIT_EMPTY_KERNEL,
  CYCSPLIT_RETRY_EXHAUSTED,
  CYCSPLIT_UNREALIZABLE_ORDER,
  CYCSPLIT_VERIFICATION_FAILED,
  CYCSPLIT_IO,
  CYCSPLIT_INTERNAL
} cycsplit_status;

typedef struct cycsplit_curve cycsplit_curve;
typedef struct cycsplit_form cycsplit_form;
typedef struct cycsplit_certificate cycsplit_certificate;
typedef struct cycsplit_kplet cycsplit_kplet;

/* ---- status and errors ---------------------------------------------- */

/* Error name as used in structured reports, e.g. "EssentiallyRamified". */
CYCSPLIT_API const char* cycsplit_status_name(cycsplit_status status);
/* Process exit code: 0 success, 2 validation, 3 mathematical, 4 retries. */
CYCSPLIT_API int cycsplit_status_exit_code(cycsplit_status status);
/* Valid until the next failing call on the same thread. */
CYCSPLIT_API const char* cycsplit_last_error_message(void);
CYCSPLIT_API const char* cycsplit_last_error_detail(void);
/* {"error": name, "message": ..., "detail": ...} for the last failure. */
CYCSPLIT_API char* cycsplit_last_error_json(void);
CYCSPLIT_API void cycsplit_string_free(char* s);
CYCSPLIT_API const char* cycsplit_version(void);

/* ---- curves ------------------------------------------------------------- */

CYCSPLIT_API cycsplit_status cycsplit_curve_create(uint32_t p, uint32_t a4, uint32_t a6, cycsplit_curve** out);
/* Smallest admissible curve with a point of order m and enough points for
 * type (b, m) constructions. */
CYCSPLIT_API cycsplit_status cycsplit_curve_find(int b, int m, uint32_t min_p, cycsplit_curve** out);
/* Curve record plus "group_order" and "discriminant". */
CYCSPLIT_API cycsplit_status cycsplit_curve_describe(const cycsplit_curve* curve, char** json_out);
CYCSPLIT_API void cycsplit_curve_destroy(cycsplit_curve* curve);

/* ---- forms -------------------------------------------------------------- */

CYCSPLIT_API cycsplit_status cycsplit_form_parse(const char* json, cycsplit_form** out);
CYCSPLIT_API cycsplit_status cycsplit_form_to_json(const cycsplit_form* form, char** json_out);
CYCSPLIT_API void cycsplit_form_destroy(cycsplit_form* form);

/* ---- splitting numbers -------------------------------------------------- */

typedef struct cycsplit_split_result {
  int nu;
  int lambda;
  int class_point_is_infinity;
  uint32_t class_x;
  uint32_t class_y;
} cycsplit_split_result;

/* Class-order path. */
CYCSPLIT_API cycsplit_status cycsplit_split(const cycsplit_curve* curve, const cycsplit_form* branch, int m,
                                            cycsplit_split_result* out);
/* Interpolation path, independent of the group law. */
CYCSPLIT_API cycsplit_status cycsplit_split_oracle(const cycsplit_curve* curve, const cycsplit_form* branch, int m,
                                                   int* nu_out);

/* ---- certificates ------------------------------------------------------- */

CYCSPLIT_API cycsplit_status cycsplit_certify(const cycsplit_curve* curve, const cycsplit_form* branch, int m,
                                              cycsplit_certificate** out);
CYCSPLIT_API cycsplit_status cycsplit_certificate_summary(const cycsplit_certificate* cert,
                                                          cycsplit_split_result* out);
CYCSPLIT_API cycsplit_status cycsplit_certificate_to_json(const cycsplit_certificate* cert, char** json_out);
/* Canonical JSON; refuses certificates that break lambda * nu = m. */
CYCSPLIT_API cycsplit_status cycsplit_certificate_write(const cycsplit_certificate* cert, const char* path);
CYCSPLIT_API void cycsplit_certificate_destroy(cycsplit_certificate* cert);
/* CYCSPLIT_OK when every recorded value recomputes; otherwise
 * CYCSPLIT_VERIFICATION_FAILED with the failing check as detail. */
CYCSPLIT_API cycsplit_status cycsplit_certificate_verify_json(const char* json);

/* ---- construction ------------------------------------------------------- */

typedef struct cycsplit_construct_params {
  int b;
  int m;
  int mu;
  uint64_t seed;
  int retry_budget;
} cycsplit_construct_params;

/* Builds a branch curve of type (b, m) with lambda = mu. report_out receives
 * {"points", "attempt", "report"}; cert_out may be NULL. */
CYCSPLIT_API cycsplit_status cycsplit_construct(const cycsplit_curve* curve, const cycsplit_construct_params* params,
                                                cycsplit_form** form_out, char** report_out,
                                                cycsplit_certificate** cert_out);
/* Type (b, m) conditions with evidence; failures are reported, not raised. */
CYCSPLIT_API cycsplit_status cycsplit_type_report(const cycsplit_curve* curve, const cycsplit_form* branch, int b,
                                                  int m, char** json_out);

/* ---- k-plets ------------------------------------------------------------ */

CYCSPLIT_API cycsplit_status cycsplit_kplet_build(const cycsplit_curve* curve, int b, int m, uint64_t seed,
                                                  int retry_budget, cycsplit_kplet** out);
CYCSPLIT_API size_t cycsplit_kplet_size(const cycsplit_kplet* kplet);
/* New handles for member i (ascending mu); either out-pointer may be NULL. */
CYCSPLIT_API cycsplit_status cycsplit_kplet_member(const cycsplit_kplet* kplet, size_t i, int* mu_out,
                                                   cycsplit_form** form_out, cycsplit_certificate** cert_out);
CYCSPLIT_API void cycsplit_kplet_destroy(cycsplit_kplet* kplet);

#ifdef __cplusplus
}
#endif

#endif /* CYCSPLIT_H */
