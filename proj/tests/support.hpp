#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

// Shared helpers and independent oracles for the test suites. The oracles
// here do not call into the library.

namespace ramified::testing {

using Complex = std::complex<double>;

inline double rel_err(double got, double want) {
  return want == 0.0 ? std::fabs(got) : std::fabs(got - want) / std::fabs(want);
}
inline double rel_err(Complex got, Complex want) {
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

inline std::mt19937_64& rng() {
  static thread_local std::mt19937_64 engine(0x5eed'd1a3'0f1eULL);
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// Dirichlet sum of n^{-z} for n <= N with an Euler-Maclaurin tail through
/// the B_6 term. Needs Re z > 0 and N well above |z|.
inline Complex dirichlet_zeta(Complex z, std::int64_t N = 100000) {
  Complex sum = 0.0;
  for (std::int64_t n = N - 1; n >= 1; --n) sum += std::exp(-z * std::log(static_cast<double>(n)));
  const double ln_n = std::log(static_cast<double>(N));
  const Complex nz = std::exp(-z * ln_n);
  const double inv = 1.0 / static_cast<double>(N);
  Complex tail = nz * static_cast<double>(N) / (z - 1.0) + 0.5 * nz;
  tail += z * nz * inv / 12.0;
  tail -= z * (z + 1.0) * (z + 2.0) * nz * inv * inv * inv / 720.0;
  tail += z * (z + 1.0) * (z + 2.0) * (z + 3.0) * (z + 4.0) * nz * std::pow(inv, 5) / 30240.0;
  return sum + tail;
}

/// Gamma by upward recurrence to Re z >= 40 followed by the Stirling series
/// for ln Gamma.
inline Complex stirling_gamma(Complex z) {
  Complex shift = 1.0;
  double log_scale = 0.0;
  while (z.real() < 40.0) {
    shift *= z;
    // keep the product in range
    const double m = std::abs(shift);
    if (m > 1e100 || m < 1e-100) {
      log_scale += std::log(m);
      shift /= m;
    }
    z += 1.0;
  }
  const double half_ln_2pi = 0.91893853320467274178;
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = inv * (1.0 / 12.0 + inv2 * (-1.0 / 360.0 + inv2 * (1.0 / 1260.0 + inv2 * (-1.0 / 1680.0 +
                                                                                              inv2 / 1188.0))));
  const Complex ln_gamma = (z - 0.5) * std::log(z) - z + half_ln_2pi + series;
  return std::exp(ln_gamma - std::log(shift) - log_scale);
}

}  // namespace ramified::testing
