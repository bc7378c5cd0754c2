#include "ramified/spectral_zeta.hpp"

#include <cmath>
#include <string>

#include "ramified/errors.hpp"

namespace ramified {
namespace {

using specfun::kPi;

constexpr double kLnPi = 1.144729885849400174143427351353058712;
constexpr double kLn2 = 0.693147180559945309417232121458176568;
constexpr double kPoleGuard = 1e-10;

// zeta_R(2s) Gamma(s) pi^{-2s}: the residue of Gamma(s) zeta(s) at a tower
// pole, up to the common factor 1 / (2 ln l).
Complex residue_core(Complex s) {
  return specfun::riemann_zeta(2.0 * s) * specfun::gamma(s) * std::exp(-2.0 * s * kLnPi);
}

// 1 - 2l l^{-2s} via expm1, exponent phase reduced to (-pi, pi].
Complex bracket_denominator(const GraphSpec& g, Complex s) {
  const double ln_l = g.log_l();
  Complex z = std::log(2.0 * g.decimation) - 2.0 * s * ln_l;
  const double turns = std::nearbyint(z.imag() / (2.0 * kPi));
  z -= Complex{0.0, 2.0 * kPi * turns};
  return -specfun::expm1(z);
}

// (1 - l^{-w}) / w with w = 2s - 1; regular at w = 0.
Complex numerator_over_distance(double ln_l, Complex w) {
  const Complex x = w * ln_l;
  if (std::abs(x) < 1e-5) {
    return ln_l * (1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0);
  }
  return -specfun::expm1(-x) / w;
}

void check_not_pole(const GraphSpec& g, Complex s) {
  const double freq = kPi / g.log_l();
  const int n = static_cast<int>(std::nearbyint(s.imag() / freq));
  if (std::abs(s - pole(g, n)) < kPoleGuard) {
    throw PoleError("zeta_closed: argument within 1e-10 of tower pole s_" + std::to_string(n));
  }
}

}  // namespace

Complex pole(const GraphSpec& g, int n) {
  return {0.5 * g.spectral_dim, kPi * static_cast<double>(n) / g.log_l()};
}

Complex zeta_bracket(const GraphSpec& g, Complex s) {
  check_not_pole(g, s);
  const Complex w = 2.0 * s - 1.0;
  return numerator_over_distance(g.log_l(), w) * w / bracket_denominator(g, s);
}

Complex zeta_closed(const GraphSpec& g, Complex s) {
  check_not_pole(g, s);
  const double ln_l = g.log_l();
  const Complex w = 2.0 * s - 1.0;
  Complex zeta_times_numerator;
  if (std::abs(w) < 0.1) {
    // zeta_R(1 + w) has a simple pole that the bracket numerator cancels.
    zeta_times_numerator = specfun::zeta_times_distance(w) * numerator_over_distance(ln_l, w);
  } else {
    zeta_times_numerator = specfun::riemann_zeta(2.0 * s) * -specfun::expm1(-w * ln_l);
  }
  return 2.0 * zeta_times_numerator * std::exp(-2.0 * s * kLnPi) / bracket_denominator(g, s);
}

Complex pole_weight(const GraphSpec& g, int n) {
  const double base = residue_core(Complex{0.5 * g.spectral_dim, 0.0}).real();
  return 2.0 * (residue_core(pole(g, n)) / base);
}

double zeta_zero(const GraphSpec& g) {
  const double l = g.decimation;
  return -0.5 * (2.0 - 2.0 * l) / (1.0 - 2.0 * l);
}

double spectral_area(const GraphSpec& g) {
  const double ds = g.spectral_dim;
  return residue_core(Complex{0.5 * ds, 0.0}).real() / (2.0 * g.log_l());
}

double spectral_area_limit() { return std::sqrt(kPi) / (2.0 * kPi * kLn2); }

PoleTower pole_tower(const GraphSpec& g, int n_max) {
  if (n_max < 0) throw DomainError("pole_tower: n_max must be non-negative");
  PoleTower tower;
  tower.s0 = 0.5 * g.spectral_dim;
  tower.frequency = kPi / g.log_l();
  tower.zeta0 = zeta_zero(g);
  tower.spectral_area = spectral_area(g);
  tower.poles.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const Complex weight = pole_weight(g, n);
    tower.poles.push_back(pole(g, n));
    tower.delta_re.push_back(weight.real());
    tower.delta_im.push_back(weight.imag());
  }
  return tower;
}

}  // namespace ramified
