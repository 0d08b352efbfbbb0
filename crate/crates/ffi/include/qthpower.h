#ifndef QTHPOWER_H
#define QTHPOWER_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QthFormat {
  QTH_FORMAT_TEXT = 0,
  QTH_FORMAT_STRUCTURED = 1,
} QthFormat;

typedef enum QthStatus {
  QTH_STATUS_OK = 0,
  QTH_STATUS_NULL_ARGUMENT = 1,
  QTH_STATUS_INVALID_UTF8 = 2,
  QTH_STATUS_PARSE = 3,
  QTH_STATUS_INVALID_INPUT = 4,
  QTH_STATUS_NOT_INVERTIBLE = 5,
  QTH_STATUS_RECONSTRUCTION = 6,
  QTH_STATUS_COMPUTATION_FAILED = 7,
  QTH_STATUS_PANIC = 8,
} QthStatus;

/**
 * A parsed problem file.
 */
typedef struct QthProblem QthProblem;

/**
 * The result of a run together with its audit log.
 */
typedef struct QthReport QthReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next call on this thread.
 */
const char *qth_last_error(void);

/**
 * Parse a problem file.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum QthStatus qth_problem_parse(const char *text, struct QthProblem **out);

/**
 * # Safety
 * `problem` must come from [`qth_problem_parse`] or be null.
 */
void qth_problem_free(struct QthProblem *problem);

/**
 * Multi-modular run over the rationals. With `nprimes == 0` the primes
 * ascend from 5, at most `max_primes` of them; `max_iter == 0` selects the
 * default iteration bound. A rejected candidate is still returned with
 * status `Ok`; see [`qth_report_accepted`].
 *
 * # Safety
 * `problem` must be a live handle, `primes` must point to `nprimes`
 * values (or be null when `nprimes` is 0), and `out` a valid pointer.
 */
enum QthStatus qth_run_char0(const struct QthProblem *problem,
                             const uint64_t *primes,
                             size_t nprimes,
                             size_t max_primes,
                             size_t max_iter,
                             struct QthReport **out);

/**
 * Closure over `Z_q`.
 *
 * # Safety
 * `problem` must be a live handle and `out` a valid pointer.
 */
enum QthStatus qth_run_charq(const struct QthProblem *problem,
                             uint64_t q,
                             size_t max_iter,
                             struct QthReport **out);

/**
 * Whether the report carries an accepted certificate (always true for
 * characteristic-q runs). Null gives false.
 *
 * # Safety
 * `report` must be a live handle or null.
 */
bool qth_report_accepted(const struct QthReport *report);

/**
 * Render a report; free the string with [`qth_string_free`].
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum QthStatus qth_report_render(const struct QthReport *report, enum QthFormat format, char **out);

/**
 * The audit log, one line per event.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum QthStatus qth_report_log(const struct QthReport *report, char **out);

/**
 * # Safety
 * `report` must come from a run function or be null.
 */
void qth_report_free(struct QthReport *report);

/**
 * Balanced image of the rational `value` (`a` or `a/b`) modulo `modulus`.
 *
 * # Safety
 * Both inputs must be NUL-terminated strings and `out` a valid pointer.
 */
enum QthStatus qth_mod_n(const char *value, const char *modulus, char **out);

/**
 * Rational reconstruction of the integer `residue` modulo `modulus`, as
 * `a` or `a/b`.
 *
 * # Safety
 * Both inputs must be NUL-terminated strings and `out` a valid pointer.
 */
enum QthStatus qth_rat_recon(const char *residue, const char *modulus, char **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void qth_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* QTHPOWER_H */
