#include "ramified/specfun.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ramified/errors.hpp"

namespace ramified::specfun {
namespace {

constexpr double kSqrtTwoPi = 2.506628274631000502415765284811045253;
constexpr double kLn2 = 0.693147180559945309417232121458176568;
constexpr double kLnPi = 1.144729885849400174143427351353058712;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993227684700473478,  676.520368121885098567009190444019,
    -1259.13921672240287047156078755283, 771.3234287776530788486528258894,
    -176.61502916214059906584551354,     12.507343278686904814458936853,
    -0.13857109526572011689554707,       9.984369578019570859563e-6,
    1.50563273514931155834e-7};

// Stieltjes constants gamma_0 .. gamma_17.
constexpr std::array<double, 18> kStieltjes = {
    0.5772156649015328606065,     -0.07281584548367672486059,
    -0.00969036319287231848453,   0.00205383442030334586616,
    0.002325370065467300057468,   0.0007933238173010627017533,
    -0.0002387693454301996098724, -0.0005272895670577510460741,
    -0.0003521233538030395096021, -0.00003439477441808804817791,
    0.0002053328149090647946837,  0.0002701844395439035266729,
    0.0001672729121051401933535,  -0.00002746380660376015886001,
    -0.0002092092620592999458371, -0.0002834686553202414466429,
    -0.0001996968583089697747078, 0.00002627703710991833669947};

constexpr double kMaxZetaImag = 150.0;
constexpr double kLaurentSwitch = 0.1;

Complex gamma_right_half(Complex z) {
  z -= 1.0;
  Complex sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return kSqrtTwoPi * std::exp((z + 0.5) * std::log(t) - t) * sum;
}

// Laurent tail sum_n (-1)^n gamma_n w^n / n!, evaluated by Horner.
Complex laurent_regular_part(Complex w) {
  std::array<double, kStieltjes.size()> coeff{};
  double factorial = 1.0;
  for (std::size_t n = 0; n < kStieltjes.size(); ++n) {
    if (n > 0) factorial *= static_cast<double>(n);
    coeff[n] = ((n % 2 == 0) ? 1.0 : -1.0) * kStieltjes[n] / factorial;
  }
  Complex acc = 0.0;
  for (std::size_t n = coeff.size(); n-- > 0;) acc = acc * w + coeff[n];
  return acc;
}

// Borwein's accelerated alternating series for eta(z) = (1 - 2^{1-z}) zeta(z).
Complex eta_alternating(Complex z) {
  const int n = static_cast<int>(std::ceil(1.8 * std::abs(z.imag()) + 28.0));
  std::vector<double> partial(static_cast<std::size_t>(n) + 1);
  double term = 1.0;
  double running = 1.0;
  partial[0] = running;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * static_cast<double>(n + i - 1) * static_cast<double>(n - i + 1) /
            (static_cast<double>(2 * i) * static_cast<double>(2 * i - 1));
    running += term;
    partial[static_cast<std::size_t>(i)] = running;
  }
  const double total = partial[static_cast<std::size_t>(n)];
  // Smallest weights sit at the end of the series; accumulate from there.
  Complex sum = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const double weight = (total - partial[static_cast<std::size_t>(k)]) / total;
    const Complex power = std::exp(-z * std::log(static_cast<double>(k + 1)));
    sum += ((k % 2 == 0) ? weight : -weight) * power;
  }
  return sum;
}

Complex zeta_from_eta(Complex z) { return eta_alternating(z) / -expm1((1.0 - z) * kLn2); }

}  // namespace

Complex sin_pi(Complex z) {
  const double x = z.real();
  const double nearest = std::nearbyint(x);
  const double frac = x - nearest;
  const double sign = (std::fmod(std::fabs(nearest), 2.0) == 1.0) ? -1.0 : 1.0;
  const double py = kPi * z.imag();
  return sign * Complex{std::sin(kPi * frac) * std::cosh(py), std::cos(kPi * frac) * std::sinh(py)};
}

Complex expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double half_sin = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin, std::exp(x) * std::sin(y)};
}

Complex gamma(Complex z) {
  if (z.real() < 0.5) {
    const double nearest = std::nearbyint(z.real());
    if (nearest <= 0.0 && std::abs(z - nearest) < 1e-12) {
      throw PoleError("gamma: argument within 1e-12 of the non-positive integer " +
                      std::to_string(static_cast<long long>(nearest)));
    }
    return kPi / (sin_pi(z) * gamma_right_half(1.0 - z));
  }
  return gamma_right_half(z);
}

namespace {

// zeta(z) = 2^z pi^{z-1} sin(pi z / 2) Gamma(1 - z) zeta(1 - z)
Complex reflected(Complex z, Complex zeta_one_minus) {
  const Complex prefactor = std::exp(z * kLn2 + (z - 1.0) * kLnPi);
  return prefactor * sin_pi(0.5 * z) * gamma(1.0 - z) * zeta_one_minus;
}

}  // namespace

Complex zeta_near_one(Complex z) {
  const Complex w = z - 1.0;
  const double dist = std::abs(w);
  if (!(dist > 0.0 && dist < 0.25)) {
    throw DomainError("zeta_near_one: requires 0 < |z - 1| < 0.25");
  }
  return 1.0 / w + laurent_regular_part(w);
}

Complex zeta_times_distance(Complex w) {
  if (std::abs(w) < kLaurentSwitch) return 1.0 + w * laurent_regular_part(w);
  return w * riemann_zeta(1.0 + w);
}

Complex riemann_zeta(Complex z) {
  if (std::abs(z.imag()) > kMaxZetaImag) {
    throw DomainError("riemann_zeta: |Im z| above supported bound 150");
  }
  const Complex w = z - 1.0;
  if (std::abs(w) < 1e-12) throw PoleError("riemann_zeta: argument within 1e-12 of the pole at 1");
  if (std::abs(w) < kLaurentSwitch) return zeta_near_one(z);

  if (z.real() < 0.0) return reflected(z, riemann_zeta(1.0 - z));

  // 1 - 2^{1-z} = -expm1((1 - z) ln 2), accurate when z is close to 1.
  const Complex denom = -expm1((1.0 - z) * kLn2);
  if (std::abs(denom) < 1e-2) {
    // Near 1 + 2 pi i k / ln 2 both eta and the denominator vanish.
    return reflected(z, zeta_from_eta(1.0 - z));
  }
  return eta_alternating(z) / denom;
}

}  // namespace ramified::specfun
