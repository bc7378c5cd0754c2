#include "ramified/entropy.hpp"

#include <cmath>
#include <string>

#include "ramified/errors.hpp"

namespace ramified {
namespace {

using specfun::kPi;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

double cutoff_power(const GraphSpec& g, double epsilon) { return std::pow(epsilon, g.spectral_dim); }

}  // namespace

double sommerfeld_c(double alpha) {
  require_positive(alpha, "alpha");
  return (1.0 - alpha * alpha) / (6.0 * alpha * alpha);
}

double effective_action(const GraphSpec& g, double alpha, double epsilon) {
  require_positive(alpha, "alpha");
  require_positive(epsilon, "epsilon");
  const double ds = g.spectral_dim;
  return spectral_area(g) * (alpha * alpha - 1.0) / (12.0 * alpha * ds * cutoff_power(g, epsilon));
}

double replica_entropy(const GraphSpec& g, double epsilon) {
  require_positive(epsilon, "epsilon");
  return spectral_area(g) / (6.0 * g.spectral_dim * cutoff_power(g, epsilon));
}

double entropy_leading(const GraphSpec& g, double epsilon, Convention convention) {
  require_positive(epsilon, "epsilon");
  const double paper = spectral_area(g) / (g.spectral_dim * cutoff_power(g, epsilon));
  return convention == Convention::paper ? paper : paper / 6.0;
}

double entropy_tilde(const GraphSpec& g, TildeNormalization norm) {
  if (norm == TildeNormalization::spectral_area) return spectral_area(g) / g.spectral_dim;
  const double ds = g.spectral_dim;
  const double l = g.decimation;
  return specfun::riemann_zeta(ds) * specfun::gamma(0.5 * ds) / (2.0 * std::log(2.0 * l));
}

double entropy_tilde_limit() { return std::sqrt(kPi) / (2.0 * std::log(2.0)); }

double correction_ratio(const GraphSpec& g, int n) {
  return 2.0 * kPi * static_cast<double>(n) / (g.spectral_dim * g.log_l());
}

CorrectionCoefficients correction_coefficients(const GraphSpec& g, const PoleTower& tower, int n) {
  if (n < 1) throw DomainError("correction order n must be >= 1");
  if (n > tower.n_max()) throw DomainError("pole tower has too few orders for correction n");
  const double b = correction_ratio(g, n);
  const double dr = tower.delta_re[n];
  const double di = tower.delta_im[n];
  const double damping = 1.0 + b * b;
  return {n, (dr + b * di) / damping, (di - b * dr) / damping, dr, di};
}

CorrectionCoefficients correction_coefficients(const GraphSpec& g, int n) {
  if (n < 1) throw DomainError("correction order n must be >= 1");
  return correction_coefficients(g, pole_tower(g, n), n);
}

double correction_phase(const GraphSpec& g, int n, double epsilon) {
  require_positive(epsilon, "epsilon");
  return static_cast<double>(n) * kPi * 2.0 * std::log(epsilon) / g.log_l();
}

double EntropyResult::correction_sum() const {
  double sum = 0.0;
  for (auto it = corrections.rbegin(); it != corrections.rend(); ++it) sum += it->cos_term + it->sin_term;
  return sum;
}

EntropyResult entropy_full(const GraphSpec& g, double epsilon, int n_max, Convention convention,
                           TildeNormalization norm) {
  require_positive(epsilon, "epsilon");
  if (n_max < 0) throw DomainError("n_max must be non-negative");

  EntropyResult result;
  result.l = g.decimation;
  result.epsilon = epsilon;
  result.d_s = g.spectral_dim;
  result.convention = convention;
  result.leading = entropy_leading(g, epsilon, convention);
  result.tilde = entropy_tilde(g, norm);
  if (n_max > 0) {
    const PoleTower tower = pole_tower(g, n_max);
    for (int n = 1; n <= n_max; ++n) {
      CorrectionTerm term;
      term.coefficients = correction_coefficients(g, tower, n);
      const double phase = correction_phase(g, n, epsilon);
      term.cos_term = term.coefficients.pi_c * std::cos(phase);
      term.sin_term = term.coefficients.pi_s * std::sin(phase);
      result.corrections.push_back(term);
    }
  }
  result.total = result.leading * (1.0 + result.correction_sum());
  return result;
}

}  // namespace ramified
