/*
 * Copyright (c) 2026 The qpc Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the qpc photonic-crystal library.
 *
 * All objects are opaque handles created by a *_create / producer function and
 * released with the matching *_destroy function (destroy accepts NULL). Every
 * fallible call returns a qpc_status; on failure, qpc_last_error() returns a
 * human-readable message for the calling thread, valid until that thread's
 * next qpc call.
 *
 * Units: lengths in nm, angular frequency in rad/s, wavenumbers in nm^-1.
 */

#ifndef QPC_QPC_H
#define QPC_QPC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(QPC_BUILDING_LIBRARY)
#    define QPC_API __declspec(dllexport)
#  else
#    define QPC_API __declspec(dllimport)
#  endif
#else
#  define QPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpc_status
{
  QPC_OK = 0,
  QPC_ERROR_INVALID_ARGUMENT = 1,
  QPC_ERROR_OUT_OF_DOMAIN = 2,
  QPC_ERROR_NUMERICAL_DEGENERACY = 3,
  QPC_ERROR_NULL_POINTER = 4,
  QPC_ERROR_INDEX_OUT_OF_RANGE = 5,
  QPC_ERROR_OUT_OF_MEMORY = 6,
  QPC_ERROR_INTERNAL = 7
} qpc_status;

typedef enum qpc_variant
{
  QPC_VARIANT_CORRECTED = 0,
  QPC_VARIANT_AS_PRINTED = 1
} qpc_variant;

typedef enum qpc_matrix_kind
{
  QPC_MATRIX_A_FIRST = 0,   /* vacuum -> A at x = 0 (period must be 1) */
  QPC_MATRIX_A_GENERAL = 1, /* B -> A opening period j >= 2 */
  QPC_MATRIX_B_GENERAL = 2, /* A -> B inside period j >= 1 */
  QPC_MATRIX_PERIOD = 3,    /* M_B^j M_A^j */
  QPC_MATRIX_TOTAL = 4      /* M^N ... M^1 (period ignored) */
} qpc_matrix_kind;

typedef enum qpc_gap_source
{
  QPC_GAP_TRANSMISSION = 0,
  QPC_GAP_DISPERSION = 1
} qpc_gap_source;

typedef enum qpc_trend_parameter
{
  QPC_TREND_THICKNESS_A = 0,
  QPC_TREND_INDEX_NA = 1
} qpc_trend_parameter;

typedef struct qpc_complex
{
  double re;
  double im;
} qpc_complex;

typedef struct qpc_matrix2
{
  qpc_complex m11, m12, m21, m22;
} qpc_matrix2;

typedef struct qpc_wave_context
{
  double omega, lambda_vac, big_k, k_a, k_b, v_a, v_b, energy, cell_length;
} qpc_wave_context;

typedef struct qpc_dispersion_point
{
  double omega;
  double rhs;
  int has_bloch_k;
  double bloch_k; /* valid iff has_bloch_k */
  int has_evanescent_decay;
  double evanescent_decay; /* valid iff has_evanescent_decay */
  double bloch_phase;      /* Re(k * cell_length) */
  int in_gap;
} qpc_dispersion_point;

typedef struct qpc_spectrum_point
{
  double omega;
  double omega_normalized;
  double t_quantum;
  double r_quantum;
  double t_classical;
  double rhs_dispersion;
  int in_gap_dispersion;
} qpc_spectrum_point;

typedef struct qpc_gap
{
  double omega_low;
  double omega_high;
  double width;
  qpc_gap_source source;
} qpc_gap;

typedef struct qpc_trend_window
{
  double lo; /* in units of the base stack's quarter-wave omega */
  double hi;
  size_t points;
  double threshold;
  int min_run;
} qpc_trend_window;

typedef struct qpc_trend_verdicts
{
  int count_nondecreasing;
  int mean_width_nonincreasing;
  int primary_gap_width_increasing;
  int count_constant;
} qpc_trend_verdicts;

typedef struct qpc_stack qpc_stack;
typedef struct qpc_spectrum qpc_spectrum;
typedef struct qpc_gap_report qpc_gap_report;
typedef struct qpc_trend qpc_trend;

QPC_API const char *qpc_version(void);
QPC_API const char *qpc_status_message(qpc_status status);
QPC_API const char *qpc_last_error(void);

/* ---- stack ------------------------------------------------------------ */

QPC_API qpc_status qpc_stack_create(double n_a, double a_nm, double n_b, double b_nm, int periods,
                                    qpc_stack **out);
/* ZnS (n = 2.35, 165 nm) / MgF2 (n = 1.38, 281 nm), 8 periods. */
QPC_API qpc_status qpc_stack_create_reference(qpc_stack **out);
QPC_API void qpc_stack_destroy(qpc_stack *stack);
QPC_API qpc_status qpc_stack_get(const qpc_stack *stack, double *n_a, double *a_nm, double *n_b,
                                 double *b_nm, int *periods);
QPC_API qpc_status qpc_quarter_wave_omega(const qpc_stack *stack, double *omega);
QPC_API qpc_status qpc_stack_wave_context(const qpc_stack *stack, double omega, qpc_wave_context *out);

/* ---- quantum transfer matrices ------------------------------------------ */

QPC_API qpc_status qpc_transfer_matrix(const qpc_stack *stack, double omega, qpc_matrix_kind kind,
                                       int period, qpc_matrix2 *out);
/* F = 1; writes F'/F and D/F. Either output may be NULL. */
QPC_API qpc_status qpc_boundary_amplitudes(const qpc_stack *stack, double omega,
                                           qpc_complex *f_prime, qpc_complex *d);
/* Either output may be NULL. */
QPC_API qpc_status qpc_transmissivity(const qpc_stack *stack, double omega, double *t, double *r);
QPC_API qpc_status qpc_classical_transmissivity(const qpc_stack *stack, double omega, double *t,
                                                double *r);
/* psi_z at each x in [-L, (N+1)L]; `psi` must hold n entries. */
QPC_API qpc_status qpc_field_profile(const qpc_stack *stack, double omega, const double *x,
                                     size_t n, qpc_complex *psi);

/* ---- dispersion ---------------------------------------------------------- */

QPC_API qpc_status qpc_dispersion_rhs(const qpc_stack *stack, double omega, qpc_variant variant,
                                      double *rhs);
QPC_API qpc_status qpc_bloch_solve(const qpc_stack *stack, double omega, qpc_variant variant,
                                   qpc_dispersion_point *out);
QPC_API qpc_status qpc_dispersion_determinant(const qpc_stack *stack, double omega,
                                              double bloch_k, qpc_complex *out);
/* `out` must hold n entries; grid strictly increasing and positive. */
QPC_API qpc_status qpc_band_structure(const qpc_stack *stack, const double *omega_grid, size_t n,
                                      qpc_variant variant, qpc_dispersion_point *out);

/* ---- spectra ------------------------------------------------------------- */

/* omega0 <= 0 selects the stack's quarter-wave omega for normalization. */
QPC_API qpc_status qpc_sweep(const qpc_stack *stack, double omega_min, double omega_max,
                             size_t points, double omega0, qpc_variant variant,
                             qpc_spectrum **out);
QPC_API void qpc_spectrum_destroy(qpc_spectrum *spectrum);
QPC_API size_t qpc_spectrum_size(const qpc_spectrum *spectrum);
/* Copies up to `capacity` points into `out`. */
QPC_API qpc_status qpc_spectrum_points(const qpc_spectrum *spectrum, qpc_spectrum_point *out,
                                       size_t capacity);
QPC_API qpc_status qpc_spectrum_compare(const qpc_spectrum *spectrum, double *max_abs_diff,
                                        double *argmax_omega);

QPC_API qpc_status qpc_detect_gaps(const qpc_spectrum *spectrum, double threshold, int min_run,
                                   qpc_gap_report **out);
QPC_API void qpc_gap_report_destroy(qpc_gap_report *report);
QPC_API size_t qpc_gap_report_size(const qpc_gap_report *report);
QPC_API qpc_status qpc_gap_report_get(const qpc_gap_report *report, size_t index, qpc_gap *out);
QPC_API size_t qpc_gap_report_count(const qpc_gap_report *report, qpc_gap_source source);
QPC_API double qpc_gap_report_mean_width(const qpc_gap_report *report, qpc_gap_source source);

/* ---- trend studies ------------------------------------------------------- */

QPC_API qpc_trend_window qpc_trend_window_default(void);
/* window may be NULL for the default. */
QPC_API qpc_status qpc_trend_study(const qpc_stack *base, qpc_trend_parameter parameter,
                                   const double *values, size_t n, const qpc_trend_window *window,
                                   qpc_trend **out);
QPC_API void qpc_trend_destroy(qpc_trend *trend);
QPC_API size_t qpc_trend_size(const qpc_trend *trend);
/* `report` is owned by the trend and lives as long as it. */
QPC_API qpc_status qpc_trend_entry(const qpc_trend *trend, size_t index, double *value,
                                   const qpc_gap_report **report);
QPC_API qpc_status qpc_trend_reference(const qpc_trend *trend, double *reference_omega,
                                       double *window_lo, double *window_hi);
QPC_API qpc_status qpc_trend_primary_gap_width(const qpc_trend *trend, size_t index,
                                               qpc_gap_source source, double *width);
QPC_API qpc_status qpc_trend_get_verdicts(const qpc_trend *trend, qpc_gap_source source,
                                      qpc_trend_verdicts *out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QPC_QPC_H */
