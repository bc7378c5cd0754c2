#include "ramified/frullani.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "ramified/errors.hpp"
#include "ramified/spectral_zeta.hpp"

namespace ramified::frullani {
namespace {

using specfun::Complex;
using specfun::kPi;
using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

constexpr unsigned kMaxDepth = 15;
constexpr double kRuleTolFloor = 1e-12;

double rule_tolerance(const Options& opts) { return std::max(kRuleTolFloor, 0.1 * opts.rel_tol); }

// Integrates f over [a, a + span] in pieces no longer than `piece`, then adds
// the supplied bound on everything beyond a + span to the error estimate.
template <class F>
Report integrate_pieces(F f, double a, double span, double piece, double tail_bound, double rule_tol) {
  const int pieces = std::max(1, static_cast<int>(std::ceil(span / piece)));
  const double h = span / pieces;
  Report report;
  report.pieces = pieces;
  // last piece first
  for (int j = pieces - 1; j >= 0; --j) {
    const double lo = a + j * h;
    double err = 0.0;
    report.value += Rule::integrate(f, lo, lo + h, kMaxDepth, rule_tol, &err);
    report.error_estimate += err;
  }
  report.error_estimate += tail_bound;
  return report;
}

void check(const Report& report, const Options& opts, const char* what) {
  const double allowed = std::max(opts.abs_tol, opts.rel_tol * std::fabs(report.value));
  if (!(report.error_estimate <= allowed) || !std::isfinite(report.value)) {
    std::ostringstream msg;
    msg << what << ": quadrature error estimate " << report.error_estimate << " exceeds " << allowed
        << " (value " << report.value << ", " << report.pieces << " pieces)";
    throw QuadratureError(msg.str());
  }
}

}  // namespace

Report effective_action(const GraphSpec& g, double alpha, double epsilon, int n_max, Options opts) {
  if (!(epsilon > 0.0)) throw DomainError("frullani: epsilon must be positive");
  if (n_max < 0) throw DomainError("frullani: n_max must be non-negative");
  const double scale = -0.25 * alpha * sommerfeld_c(alpha);

  const PoleTower tower = pole_tower(g, n_max);
  const double decay = tower.s0;
  const double omega = tower.frequency;
  double amplitude = 1.0;
  for (int n = 1; n <= n_max; ++n) amplitude += std::hypot(tower.delta_re[n], tower.delta_im[n]);

  // K_Sigma(e^u) - zeta0 as a function of u = ln t.
  auto integrand = [&](double u) {
    double osc = 1.0;
    for (int n = n_max; n >= 1; --n) {
      const double phase = n * omega * u;
      osc += tower.delta_re[n] * std::cos(phase) + tower.delta_im[n] * std::sin(phase);
    }
    return tower.spectral_area * std::exp(-decay * u) * osc;
  };

  const double u0 = 2.0 * std::log(epsilon);
  const double span = opts.decay_span / decay;
  const double piece = n_max > 0 ? std::min(1.0, kPi / (n_max * omega)) : 1.0;
  const double tail = tower.spectral_area * amplitude * std::exp(-decay * (u0 + span)) / decay;
  Report report = integrate_pieces(integrand, u0, span, piece, tail, rule_tolerance(opts));
  report.value *= scale;
  report.error_estimate *= std::fabs(scale);
  check(report, opts, "frullani effective action");
  return report;
}

double frullani_oracle(const GraphSpec& g, double alpha, double epsilon, int n_max, Options opts) {
  return effective_action(g, alpha, epsilon, n_max, opts).value;
}

Complex log_time_integral(double decay, double frequency, double u0, Options opts) {
  if (!(decay > 0.0)) throw DomainError("log_time_integral: decay must be positive");
  const double span = opts.decay_span / decay;
  const double piece = frequency != 0.0 ? std::min(1.0, kPi / std::fabs(frequency)) : 1.0;
  const double tail = std::exp(-decay * (u0 + span)) / decay;
  auto re = [&](double u) { return std::exp(-decay * u) * std::cos(frequency * u); };
  auto im = [&](double u) { return std::exp(-decay * u) * std::sin(frequency * u); };
  const Report r = integrate_pieces(re, u0, span, piece, tail, rule_tolerance(opts));
  const Report i = integrate_pieces(im, u0, span, piece, tail, rule_tolerance(opts));
  const double scale = std::exp(-decay * u0) / decay;
  Options scaled = opts;
  scaled.abs_tol = opts.abs_tol * scale;
  check(r, scaled, "log_time_integral (cos)");
  check(i, scaled, "log_time_integral (sin)");
  return {r.value, i.value};
}

CorrectionCoefficients correction_coefficients(const GraphSpec& g, int n, double epsilon, Options opts) {
  if (n < 1) throw DomainError("frullani: correction order n must be >= 1");
  const Complex weight = pole_weight(g, n);
  const double decay = 0.5 * g.spectral_dim;
  const double omega = kPi * n / g.log_l();
  const double u0 = 2.0 * std::log(epsilon);
  const Complex q = log_time_integral(decay, omega, u0, opts);
  const double phase = omega * u0;
  const Complex rotated = std::conj(weight) * q * decay * std::exp(decay * u0) * std::polar(1.0, -phase);
  return {n, rotated.real(), -rotated.imag(), weight.real(), weight.imag()};
}

double replica_entropy(const GraphSpec& g, double epsilon, int n_max, double step, Options opts) {
  const double up = frullani_oracle(g, 1.0 + step, epsilon, n_max, opts);
  const double down = frullani_oracle(g, 1.0 - step, epsilon, n_max, opts);
  const double at_one = frullani_oracle(g, 1.0, epsilon, n_max, opts);
  return (up - down) / (2.0 * step) - at_one;
}

}  // namespace ramified::frullani
