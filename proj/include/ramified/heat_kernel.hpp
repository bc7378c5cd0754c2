#pragma once

#include <cstdint>

#include "ramified/graph_model.hpp"
#include "ramified/spectral_zeta.hpp"

namespace ramified {

// Diffusion time is called t throughout; s is reserved for zeta arguments.

enum class TraceMethod { direct, asymptotic };

struct HeatTraceResult {
  double t = 0.0;
  double value = 0.0;
  TraceMethod method = TraceMethod::direct;
  /// direct: rigorous truncation bound. asymptotic: size of the first
  /// omitted log-periodic term.
  double error_estimate = 0.0;
  int n_max_used = 0;             ///< asymptotic only
  std::int64_t terms_used = 0;    ///< direct only
};

struct DirectTraceLimits {
  double min_time = 1e-8;
  std::int64_t max_terms = 50'000'000;
};

/// sum_{n >= 1} exp(-pi^2 n^2 t), the Dirichlet trace of the unit segment,
/// summed directly with absolute error at most tol.
double theta_segment(double t, double tol = 1e-300);

/// Heat trace K(t) = sum_k m_k theta_segment(t l^{2k}) by direct summation
/// over the eigenvalue ladder. Levels are accumulated from the highest k and
/// each level from its largest n, so the smallest terms enter first.
///
/// Throws DomainError for t <= 0 or tol <= 0, ResourceError for
/// t < limits.min_time or when the term count would exceed limits.max_terms
/// (the count grows like t^{-d_s/2}).
HeatTraceResult trace_direct(const GraphSpec& g, double t, double tol = 1e-300,
                             DirectTraceLimits limits = {});

/// Pole expansion of the trace:
///   zeta0 + A_s t^{-d_s/2} [1 + sum_{n=1}^{n_max} Delta_{Re,n} cos(w_n ln t)
///                                          + Delta_{Im,n} sin(w_n ln t)],
/// w_n = n pi / ln l. Uses the first n_max orders of the tower; the tower
/// must carry at least n_max + 1 orders to report an error estimate.
HeatTraceResult trace_asymptotic(const PoleTower& tower, double t, int n_max);
HeatTraceResult trace_asymptotic(const GraphSpec& g, double t, int n_max = kDefaultPoleOrders);

/// Non-oscillatory pole expansion at l -> infinity:
/// -1/2 + A t^{-1/2} with A = spectral_area_limit().
double smooth_limit_trace(double t);

}  // namespace ramified
