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

#include "qpc/qpc.h"

#include "qpc/classical.hpp"
#include "qpc/dispersion.hpp"
#include "qpc/error.hpp"
#include "qpc/quantum_tmm.hpp"
#include "qpc/spectrum.hpp"
#include "qpc/stack.hpp"

#include <algorithm>
#include <memory>
#include <new>
#include <string>
#include <vector>

struct qpc_stack
{
  qpc::StackSpec spec;
};

struct qpc_spectrum
{
  std::vector<qpc::SpectrumPoint> points;
};

struct qpc_gap_report
{
  qpc::GapReport report;
};

struct qpc_trend
{
  qpc::TrendStudy study;
  std::vector<qpc_gap_report> reports;
};

namespace
{

thread_local std::string last_error;

qpc_status fail(qpc_status status, const char *message)
{
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F> qpc_status guarded(F &&body)
{
  try
  {
    last_error.clear();
    body();
    return QPC_OK;
  }
  catch (const qpc::OutOfDomain &e)
  {
    return fail(QPC_ERROR_OUT_OF_DOMAIN, e.what());
  }
  catch (const qpc::InvalidParameter &e)
  {
    return fail(QPC_ERROR_INVALID_ARGUMENT, e.what());
  }
  catch (const qpc::NumericalDegeneracy &e)
  {
    return fail(QPC_ERROR_NUMERICAL_DEGENERACY, e.what());
  }
  catch (const std::out_of_range &e)
  {
    return fail(QPC_ERROR_INDEX_OUT_OF_RANGE, e.what());
  }
  catch (const std::bad_alloc &)
  {
    return fail(QPC_ERROR_OUT_OF_MEMORY, "out of memory");
  }
  catch (const std::exception &e)
  {
    return fail(QPC_ERROR_INTERNAL, e.what());
  }
  catch (...)
  {
    return fail(QPC_ERROR_INTERNAL, "unknown error");
  }
}

qpc_complex to_c(const qpc::Complex &z) { return {z.real(), z.imag()}; }

qpc_matrix2 to_c(const qpc::Matrix2 &m)
{
  return {to_c(m.m11), to_c(m.m12), to_c(m.m21), to_c(m.m22)};
}

qpc_dispersion_point to_c(const qpc::DispersionPoint &p)
{
  qpc_dispersion_point out{};
  out.omega = p.omega;
  out.rhs = p.rhs;
  out.has_bloch_k = p.bloch_k.has_value();
  out.bloch_k = p.bloch_k.value_or(0.0);
  out.has_evanescent_decay = p.evanescent_decay.has_value();
  out.evanescent_decay = p.evanescent_decay.value_or(0.0);
  out.bloch_phase = p.bloch_phase;
  out.in_gap = p.in_gap;
  return out;
}

qpc_gap to_c(const qpc::Gap &g)
{
  return {g.omega_low, g.omega_high, g.width,
          g.source == qpc::GapSource::transmission ? QPC_GAP_TRANSMISSION : QPC_GAP_DISPERSION};
}

qpc::DispersionVariant from_c(qpc_variant v)
{
  switch (v)
  {
  case QPC_VARIANT_CORRECTED:
    return qpc::DispersionVariant::corrected;
  case QPC_VARIANT_AS_PRINTED:
    return qpc::DispersionVariant::as_printed;
  }
  throw qpc::InvalidParameter("unknown dispersion variant");
}

qpc::GapSource from_c(qpc_gap_source s)
{
  switch (s)
  {
  case QPC_GAP_TRANSMISSION:
    return qpc::GapSource::transmission;
  case QPC_GAP_DISPERSION:
    return qpc::GapSource::dispersion;
  }
  throw qpc::InvalidParameter("unknown gap source");
}

#define QPC_REQUIRE(ptr)                                                                           \
  do                                                                                               \
  {                                                                                                \
    if ((ptr) == nullptr)                                                                          \
      return fail(QPC_ERROR_NULL_POINTER, #ptr " must not be NULL");                               \
  } while (0)

} // namespace

extern "C" {

const char *qpc_version(void) { return "1.0.0"; }

const char *qpc_status_message(qpc_status status)
{
  switch (status)
  {
  case QPC_OK:
    return "ok";
  case QPC_ERROR_INVALID_ARGUMENT:
    return "invalid argument";
  case QPC_ERROR_OUT_OF_DOMAIN:
    return "out of domain";
  case QPC_ERROR_NUMERICAL_DEGENERACY:
    return "numerical degeneracy";
  case QPC_ERROR_NULL_POINTER:
    return "null pointer";
  case QPC_ERROR_INDEX_OUT_OF_RANGE:
    return "index out of range";
  case QPC_ERROR_OUT_OF_MEMORY:
    return "out of memory";
  case QPC_ERROR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

const char *qpc_last_error(void) { return last_error.c_str(); }

qpc_status qpc_stack_create(double n_a, double a_nm, double n_b, double b_nm, int periods,
                            qpc_stack **out)
{
  QPC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    qpc::StackSpec spec{{n_a, a_nm}, {n_b, b_nm}, periods, 1.0};
    spec.validate();
    *out = new qpc_stack{spec};
  });
}

qpc_status qpc_stack_create_reference(qpc_stack **out)
{
  QPC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new qpc_stack{qpc::StackSpec::reference()}; });
}

void qpc_stack_destroy(qpc_stack *stack) { delete stack; }

qpc_status qpc_stack_get(const qpc_stack *stack, double *n_a, double *a_nm, double *n_b,
                         double *b_nm, int *periods)
{
  QPC_REQUIRE(stack);
  const qpc::StackSpec &s = stack->spec;
  if (n_a)
    *n_a = s.layer_a.refractive_index;
  if (a_nm)
    *a_nm = s.layer_a.thickness_nm;
  if (n_b)
    *n_b = s.layer_b.refractive_index;
  if (b_nm)
    *b_nm = s.layer_b.thickness_nm;
  if (periods)
    *periods = s.periods;
  return QPC_OK;
}

qpc_status qpc_quarter_wave_omega(const qpc_stack *stack, double *omega)
{
  QPC_REQUIRE(stack);
  QPC_REQUIRE(omega);
  return guarded([&] { *omega = qpc::quarter_wave_omega(stack->spec); });
}

qpc_status qpc_stack_wave_context(const qpc_stack *stack, double omega, qpc_wave_context *out)
{
  QPC_REQUIRE(stack);
  QPC_REQUIRE(out);
  return guarded([&] {
    const qpc::WaveContext c = qpc::make_wave_context(stack->spec, omega);
    *out = {c.omega, c.lambda_vac, c.big_k, c.k_a, c.k_b, c.v_a, c.v_b, c.energy, c.cell_length};
  });
}

qpc_status qpc_transfer_matrix(const qpc_stack *stack, double omega, qpc_matrix_kind kind,
                               int period, qpc_matrix2 *out)
{
  QPC_REQUIRE(stack);
  QPC_REQUIRE(out);
  return guarded([&] {
    const qpc::WaveContext ctx = qpc::make_wave_context(stack->spec, omega);
    if (kind != QPC_MATRIX_TOTAL && period > stack->spec.periods)
      throw qpc::InvalidParameter("period index exceeds the number of periods");
    switch (kind)
    {
    case QPC_MATRIX_A_FIRST:
      if (period != 1)
        throw qpc::InvalidParameter("the first A matrix belongs to period 1");
      *out = to_c(qpc::matrix_a_first(ctx).inner);
      return;
    case QPC_MATRIX_A_GENERAL:
      *out = to_c(qpc::matrix_a_n(ctx, period).inner);
      return;
    case QPC_MATRIX_B_GENERAL:
      *out = to_c(qpc::matrix_b_n(ctx, period).inner);
      return;
    case QPC_MATRIX_PERIOD:
      if (period < 1)
        throw qpc::InvalidParameter("period index must be >= 1");
      *out = to_c(qpc::period_matrix(ctx, period).inner);
      return;
    case QPC_MATRIX_TOTAL:
      *out = to_c(qpc::total_matrix(stack->spec, ctx).inner);
      return;
    }
    throw qpc::InvalidParameter("unknown matrix kind");
  });
}

qpc_status qpc_boundary_amplitudes(const qpc_stack *stack, double omega, qpc_complex *f_prime,
                                   qpc_complex *d)
{
  QPC_REQUIRE(stack);
  return guarded([&] {
    const qpc::BoundaryAmplitudes amp = qpc::boundary_amplitudes(stack->spec, omega);
    if (f_prime)
      *f_prime = to_c(amp.f_prime);
    if (d)
      *d = to_c(amp.d);
  });
}

qpc_status qpc_transmissivity(const qpc_stack *stack, double omega, double *t, double *r)
{
  QPC_REQUIRE(stack);
  return guarded([&] {
    const qpc::TransmissionResult res = qpc::transmissivity_reflectivity(stack->spec, omega);
    if (t)
      *t = res.transmissivity;
    if (r)
      *r = res.reflectivity;
  });
}

qpc_status qpc_classical_transmissivity(const qpc_stack *stack, double omega, double *t, double *r)
{
  QPC_REQUIRE(stack);
  return guarded([&] {
    const qpc::classical::Result res = qpc::classical::classical_transmissivity(stack->spec, omega);
    if (t)
      *t = res.transmissivity;
    if (r)
      *r = res.reflectivity;
  });
}

qpc_status qpc_field_profile(const qpc_stack *stack, double omega, const double *x, size_t n,
                             qpc_complex *psi)
{
  QPC_REQUIRE(stack);
  if (n > 0)
  {
    QPC_REQUIRE(x);
    QPC_REQUIRE(psi);
  }
  return guarded([&] {
    const std::vector<qpc::FieldSample> samples =
        qpc::field_profile(stack->spec, omega, std::span<const double>(x, n));
    for (size_t i = 0; i < n; ++i)
      psi[i] = to_c(samples[i].psi);
  });
}

qpc_status qpc_dispersion_rhs(const qpc_stack *stack, double omega, qpc_variant variant,
                              double *rhs)
{
  QPC_REQUIRE(stack);
  QPC_REQUIRE(rhs);
  return guarded([&] {
    *rhs = qpc::dispersion_rhs(qpc::make_wave_context(stack->spec, omega), from_c(variant));
  });
}

qpc_status qpc_bloch_solve(const qpc_stack *stack, double omega, qpc_variant variant,
                           qpc_dispersion_point *out)
{
  QPC_REQUIRE(stack);
  QPC_REQUIRE(out);
  return guarded([&] {
    *out = to_c(qpc::bloch_solve(qpc::make_wave_context(stack->spec, omega), from_c(variant)));
  });
}

qpc_status qpc_dispersion_determinant(const qpc_stack *stack, double omega, double bloch_k,
                                      qpc_complex *out)
{
  QPC_REQUIRE(stack);
  QPC_REQUIRE(out);
  return guarded([&] {
    *out = to_c(qpc::dispersion_determinant(qpc::make_wave_context(stack->spec, omega), bloch_k));
  });
}

qpc_status qpc_band_structure(const qpc_stack *stack, const double *omega_grid, size_t n,
                              qpc_variant variant, qpc_dispersion_point *out)
{
  QPC_REQUIRE(stack);
  if (n > 0)
  {
    QPC_REQUIRE(omega_grid);
    QPC_REQUIRE(out);
  }
  return guarded([&] {
    const std::vector<qpc::DispersionPoint> points = qpc::band_structure(
        stack->spec, std::span<const double>(omega_grid, n), from_c(variant));
    for (size_t i = 0; i < n; ++i)
      out[i] = to_c(points[i]);
  });
}

qpc_status qpc_sweep(const qpc_stack *stack, double omega_min, double omega_max, size_t points,
                     double omega0, qpc_variant variant, qpc_spectrum **out)
{
  QPC_REQUIRE(stack);
  QPC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    qpc::SweepOptions options;
    if (omega0 > 0.0)
      options.omega0 = omega0;
    options.variant = from_c(variant);
    *out = new qpc_spectrum{qpc::sweep(stack->spec, omega_min, omega_max, points, options)};
  });
}

void qpc_spectrum_destroy(qpc_spectrum *spectrum) { delete spectrum; }

size_t qpc_spectrum_size(const qpc_spectrum *spectrum)
{
  return spectrum ? spectrum->points.size() : 0;
}

qpc_status qpc_spectrum_points(const qpc_spectrum *spectrum, qpc_spectrum_point *out,
                               size_t capacity)
{
  QPC_REQUIRE(spectrum);
  if (capacity > 0)
    QPC_REQUIRE(out);
  const size_t n = std::min(capacity, spectrum->points.size());
  for (size_t i = 0; i < n; ++i)
  {
    const qpc::SpectrumPoint &p = spectrum->points[i];
    out[i] = {p.omega,       p.omega_normalized, p.t_quantum,          p.r_quantum,
              p.t_classical, p.rhs_dispersion,   p.in_gap_dispersion};
  }
  return QPC_OK;
}

qpc_status qpc_spectrum_compare(const qpc_spectrum *spectrum, double *max_abs_diff,
                                double *argmax_omega)
{
  QPC_REQUIRE(spectrum);
  return guarded([&] {
    const qpc::Comparison c = qpc::compare_quantum_classical(spectrum->points);
    if (max_abs_diff)
      *max_abs_diff = c.max_abs_diff;
    if (argmax_omega)
      *argmax_omega = c.argmax_omega;
  });
}

qpc_status qpc_detect_gaps(const qpc_spectrum *spectrum, double threshold, int min_run,
                           qpc_gap_report **out)
{
  QPC_REQUIRE(spectrum);
  QPC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new qpc_gap_report{qpc::detect_gaps(spectrum->points, {threshold, min_run})};
  });
}

void qpc_gap_report_destroy(qpc_gap_report *report) { delete report; }

size_t qpc_gap_report_size(const qpc_gap_report *report)
{
  return report ? report->report.gaps.size() : 0;
}

qpc_status qpc_gap_report_get(const qpc_gap_report *report, size_t index, qpc_gap *out)
{
  QPC_REQUIRE(report);
  QPC_REQUIRE(out);
  if (index >= report->report.gaps.size())
    return fail(QPC_ERROR_INDEX_OUT_OF_RANGE, "gap index out of range");
  *out = to_c(report->report.gaps[index]);
  return QPC_OK;
}

size_t qpc_gap_report_count(const qpc_gap_report *report, qpc_gap_source source)
{
  if (!report || (source != QPC_GAP_TRANSMISSION && source != QPC_GAP_DISPERSION))
    return 0;
  return report->report.count(from_c(source));
}

double qpc_gap_report_mean_width(const qpc_gap_report *report, qpc_gap_source source)
{
  if (!report || (source != QPC_GAP_TRANSMISSION && source != QPC_GAP_DISPERSION))
    return 0.0;
  return report->report.mean_width(from_c(source));
}

qpc_trend_window qpc_trend_window_default(void)
{
  const qpc::TrendWindow w;
  return {w.lo, w.hi, w.points, w.detection.threshold, w.detection.min_run};
}

qpc_status qpc_trend_study(const qpc_stack *base, qpc_trend_parameter parameter,
                           const double *values, size_t n, const qpc_trend_window *window,
                           qpc_trend **out)
{
  QPC_REQUIRE(base);
  QPC_REQUIRE(out);
  *out = nullptr;
  if (n > 0)
    QPC_REQUIRE(values);
  return guarded([&] {
    if (parameter != QPC_TREND_THICKNESS_A && parameter != QPC_TREND_INDEX_NA)
      throw qpc::InvalidParameter("unknown trend parameter");
    qpc::TrendWindow w;
    if (window)
      w = {window->lo, window->hi, window->points, {window->threshold, window->min_run}};
    const auto p = parameter == QPC_TREND_THICKNESS_A ? qpc::TrendParameter::thickness_a
                                                      : qpc::TrendParameter::index_na;
    auto trend = std::make_unique<qpc_trend>();
    trend->study = qpc::trend_study(base->spec, p, std::span<const double>(values, n), w);
    for (const qpc::TrendEntry &e : trend->study.entries)
      trend->reports.push_back({e.report});
    *out = trend.release();
  });
}

void qpc_trend_destroy(qpc_trend *trend) { delete trend; }

size_t qpc_trend_size(const qpc_trend *trend) { return trend ? trend->study.entries.size() : 0; }

qpc_status qpc_trend_entry(const qpc_trend *trend, size_t index, double *value,
                           const qpc_gap_report **report)
{
  QPC_REQUIRE(trend);
  if (index >= trend->study.entries.size())
    return fail(QPC_ERROR_INDEX_OUT_OF_RANGE, "trend entry index out of range");
  if (value)
    *value = trend->study.entries[index].value;
  if (report)
    *report = &trend->reports[index];
  return QPC_OK;
}

qpc_status qpc_trend_reference(const qpc_trend *trend, double *reference_omega, double *window_lo,
                               double *window_hi)
{
  QPC_REQUIRE(trend);
  if (reference_omega)
    *reference_omega = trend->study.reference_omega;
  if (window_lo)
    *window_lo = trend->study.window_lo;
  if (window_hi)
    *window_hi = trend->study.window_hi;
  return QPC_OK;
}

qpc_status qpc_trend_primary_gap_width(const qpc_trend *trend, size_t index,
                                       qpc_gap_source source, double *width)
{
  QPC_REQUIRE(trend);
  QPC_REQUIRE(width);
  return guarded([&] { *width = trend->study.primary_gap_width(index, from_c(source)); });
}

qpc_status qpc_trend_get_verdicts(const qpc_trend *trend, qpc_gap_source source,
                              qpc_trend_verdicts *out)
{
  QPC_REQUIRE(trend);
  QPC_REQUIRE(out);
  return guarded([&] {
    const qpc::TrendVerdicts v = trend->study.verdicts(from_c(source));
    *out = {v.count_nondecreasing, v.mean_width_nonincreasing, v.primary_gap_width_increasing,
            v.count_constant};
  });
}

} // extern "C"
