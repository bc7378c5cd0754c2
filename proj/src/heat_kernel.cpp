#include "ramified/heat_kernel.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ramified/errors.hpp"

namespace ramified {
namespace {

using specfun::kPi;
constexpr double kPi2 = kPi * kPi;

// log of exp(-a m^2) / (1 - exp(-2 a m)), the bound on sum_{n >= m} exp(-a n^2).
double log_gaussian_tail(double a, double m) {
  return -a * m * m - std::log(-std::expm1(-2.0 * a * m));
}

// Largest index N such that the omitted sum over n > N stays below exp(log_tol).
std::int64_t gaussian_cutoff(double a, double log_tol) {
  double m = std::max(1.0, std::ceil(std::sqrt(std::max(0.0, -log_tol) / a)));
  while (log_gaussian_tail(a, m) > log_tol) m += 1.0;
  while (m > 1.0 && log_gaussian_tail(a, m - 1.0) <= log_tol) m -= 1.0;
  return static_cast<std::int64_t>(m) - 1;
}

double descending_gaussian_sum(double a, std::int64_t n_max) {
  double sum = 0.0;
  for (std::int64_t n = n_max; n >= 1; --n) {
    const double nd = static_cast<double>(n);
    sum += std::exp(-a * nd * nd);
  }
  return sum;
}

}  // namespace

double theta_segment(double t, double tol) {
  if (!(t > 0.0)) throw DomainError("theta_segment: t must be positive");
  if (!(tol > 0.0)) throw DomainError("theta_segment: tol must be positive");
  const double a = kPi2 * t;
  return descending_gaussian_sum(a, gaussian_cutoff(a, std::log(tol)));
}

HeatTraceResult trace_direct(const GraphSpec& g, double t, double tol, DirectTraceLimits limits) {
  if (!(t > 0.0)) throw DomainError("trace_direct: t must be positive");
  if (!(tol > 0.0)) throw DomainError("trace_direct: tol must be positive");
  if (t < limits.min_time) {
    throw ResourceError("trace_direct: t below the direct-summation cutoff " +
                        std::to_string(limits.min_time) + "; use the asymptotic trace");
  }
  const double l = g.decimation;
  const double log_l2 = 2.0 * std::log(l);

  // Per-level bound on the whole level, log(m_k) + log tail(a_k, 1); find the
  // first level K from which everything left is below tol / 2.
  std::vector<double> log_level_bound;
  for (int k = 0; k < 4096; ++k) {
    const double a = kPi2 * t * std::exp(k * log_l2);
    const double log_m = std::log(level_multiplicity(g.decimation, k));
    const double lb = log_m + log_gaussian_tail(a, 1.0);
    log_level_bound.push_back(lb);
    if (lb < std::log(DBL_MIN) - 50.0 || !std::isfinite(a)) break;
  }
  const double log_half_tol = std::log(tol) - std::log(2.0);
  std::size_t levels = log_level_bound.size();
  double dropped = 0.0;
  while (levels > 0) {
    const double candidate = dropped + std::exp(log_level_bound[levels - 1]);
    if (std::log(candidate) > log_half_tol) break;
    dropped = candidate;
    --levels;
  }

  std::vector<std::int64_t> cutoffs(levels);
  std::int64_t terms = 0;
  double kept_bound = 0.0;
  const double log_share = log_half_tol - std::log(static_cast<double>(std::max<std::size_t>(levels, 1)));
  for (std::size_t k = 0; k < levels; ++k) {
    const double a = kPi2 * t * std::exp(static_cast<double>(k) * log_l2);
    const double log_m = std::log(level_multiplicity(g.decimation, static_cast<int>(k)));
    cutoffs[k] = gaussian_cutoff(a, log_share - log_m);
    kept_bound += std::exp(log_m + log_gaussian_tail(a, static_cast<double>(cutoffs[k] + 1)));
    terms += cutoffs[k];
    if (terms > limits.max_terms) {
      throw ResourceError("trace_direct: term count exceeds cap of " + std::to_string(limits.max_terms));
    }
  }

  double value = 0.0;
  for (std::size_t k = levels; k-- > 0;) {
    const double a = kPi2 * t * std::exp(static_cast<double>(k) * log_l2);
    value += level_multiplicity(g.decimation, static_cast<int>(k)) * descending_gaussian_sum(a, cutoffs[k]);
  }

  HeatTraceResult result;
  result.t = t;
  result.value = value;
  result.method = TraceMethod::direct;
  result.error_estimate = kept_bound + dropped + static_cast<double>(terms + 2) * DBL_EPSILON * value;
  result.terms_used = terms;
  return result;
}

HeatTraceResult trace_asymptotic(const PoleTower& tower, double t, int n_max) {
  if (!(t > 0.0)) throw DomainError("trace_asymptotic: t must be positive");
  if (n_max < 0) throw DomainError("trace_asymptotic: n_max must be non-negative");
  if (n_max > tower.n_max()) throw DomainError("trace_asymptotic: pole tower has too few orders");

  const double ln_t = std::log(t);
  double oscillation = 0.0;
  for (int n = n_max; n >= 1; --n) {
    const double phase = n * tower.frequency * ln_t;
    oscillation += tower.delta_re[n] * std::cos(phase) + tower.delta_im[n] * std::sin(phase);
  }
  const double power = tower.spectral_area * std::exp(-tower.s0 * ln_t);

  HeatTraceResult result;
  result.t = t;
  result.value = tower.zeta0 + power * (1.0 + oscillation);
  result.method = TraceMethod::asymptotic;
  result.n_max_used = n_max;
  const int next = std::min(n_max + 1, tower.n_max());
  result.error_estimate =
      next >= 1 ? power * std::hypot(tower.delta_re[next], tower.delta_im[next]) : 0.0;
  return result;
}

HeatTraceResult trace_asymptotic(const GraphSpec& g, double t, int n_max) {
  if (n_max < 0) throw DomainError("trace_asymptotic: n_max must be non-negative");
  return trace_asymptotic(pole_tower(g, n_max + 1), t, n_max);
}

double smooth_limit_trace(double t) {
  if (!(t > 0.0)) throw DomainError("smooth_limit_trace: t must be positive");
  return -0.5 + spectral_area_limit() / std::sqrt(t);
}

}  // namespace ramified
