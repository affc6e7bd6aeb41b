/* C interface to the qdiscord library. Generated by cbindgen; do not edit. */

#ifndef QDISCORD_H
#define QDISCORD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum QdStatus {
  /**
   * Success.
   */
  QD_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  QD_STATUS_NULL_POINTER = 1,
  /**
   * An argument was outside its domain.
   */
  QD_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The inputs do not describe a valid density matrix.
   */
  QD_STATUS_INVALID_STATE = 3,
  /**
   * A channel output left the X pattern.
   */
  QD_STATUS_NOT_X_FORM = 4,
  /**
   * The request exceeds a built-in size limit.
   */
  QD_STATUS_UNSUPPORTED = 5,
} QdStatus;

/**
 * Noise channel selector.
 */
typedef enum QdChannel {
  QD_CHANNEL_PHASE_FLIP = 0,
  QD_CHANNEL_AMPLITUDE_DAMPING = 1,
  QD_CHANNEL_PHASE_DAMPING = 2,
  QD_CHANNEL_DEPOLARIZING = 3,
} QdChannel;

/**
 * Opaque two-qubit X-state handle.
 */
typedef struct QdState QdState;

/**
 * Correlation measures of one state, entropic quantities in bits.
 */
typedef struct QdReport {
  double qd;
  double gmqd_normalized;
  double classical;
  double mutual_info;
  double q1;
  double q2;
} QdReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version string of this library; static storage, do not free.
 */
const char *qd_version(void);

/**
 * Build an X state from its seven parameters (the four populations, the
 * complex anti-diagonal coherence a = rho14 and the complex inner coherence
 * b = rho23). Writes a new handle to `out` on success.
 *
 * # Safety
 * `out` must be a writable pointer slot.
 */
enum QdStatus qd_state_new(double d1,
                           double d2,
                           double d3,
                           double d4,
                           double a_re,
                           double a_im,
                           double b_re,
                           double b_im,
                           struct QdState **out);

/**
 * Release a handle returned by this library. Null is ignored.
 *
 * # Safety
 * `state` must be a pointer previously returned through one of the
 * `out` parameters of this library and not yet freed.
 */
void qd_state_free(struct QdState *state);

/**
 * Two-qubit reduced state of the N-qubit one-axis-twisting collective state
 * at twisting angle theta (radians).
 *
 * # Safety
 * `out` must be a writable pointer slot.
 */
enum QdStatus qd_twisted_state(uint32_t n, double theta, struct QdState **out);

/**
 * Apply a noise channel at Kraus strength `p` to both qubits of `state`
 * through the generic Kraus route. Writes a new handle; the input handle is
 * left untouched.
 *
 * # Safety
 * `state` must be a live handle from this library.
 */
enum QdStatus qd_state_apply_channel(const struct QdState *state,
                                     enum QdChannel channel,
                                     double p,
                                     struct QdState **out);

/**
 * Twisting state evolved under a channel at dimensionless time gamma_t,
 * through the analytic matrix-element formulas. gamma_t = 0 is noiseless
 * for every channel.
 *
 * # Safety
 * `out` must be a writable pointer slot.
 */
enum QdStatus qd_twisted_evolved(uint32_t n,
                                 double theta,
                                 enum QdChannel channel,
                                 double gamma_t,
                                 struct QdState **out);

/**
 * Copy the eight real parameters (d1, d2, d3, d4, a_re, a_im, b_re, b_im)
 * into `entries`.
 *
 * # Safety
 * `state` must be a live handle; `entries` must point to at least eight
 * writable f64 slots.
 */
enum QdStatus qd_state_entries(const struct QdState *state, double *entries);

/**
 * Compute all correlation measures of `state`.
 *
 * # Safety
 * `state` must be a live handle; `report` must be writable.
 */
enum QdStatus qd_state_report(const struct QdState *state, struct QdReport *report);

/**
 * Shannon binary entropy in bits.
 *
 * # Safety
 * `out` must be a writable f64 slot.
 */
enum QdStatus qd_binary_entropy(double x, double *out);

/**
 * The decay parameter p = exp(-gamma_t).
 *
 * # Safety
 * `out` must be a writable f64 slot.
 */
enum QdStatus qd_p_of_gamma_t(double gamma_t, double *out);

/**
 * Brute-force quantum discord by projective-measurement minimization on the
 * second qubit; an upper bound converging from above as the grid refines.
 * Pass (64, 3, 0.2) for the default grid.
 *
 * # Safety
 * `state` must be a live handle; `out` must be writable.
 */
enum QdStatus qd_discord_bruteforce(const struct QdState *state,
                                    uint32_t coarse_points,
                                    uint32_t refine_rounds,
                                    double refine_shrink,
                                    double *out);

/**
 * Brute-force (unnormalized) geometric discord by Hilbert-Schmidt
 * minimization over projective dephasings of the first qubit.
 *
 * # Safety
 * `state` must be a live handle; `out` must be writable.
 */
enum QdStatus qd_gmqd_bruteforce(const struct QdState *state,
                                 uint32_t coarse_points,
                                 uint32_t refine_rounds,
                                 double refine_shrink,
                                 double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QDISCORD_H */
