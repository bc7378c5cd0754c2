#pragma once

#include <vector>

#include "ramified/graph_model.hpp"
#include "ramified/specfun.hpp"

namespace ramified {

using specfun::Complex;

inline constexpr int kDefaultPoleOrders = 8;

/// Exact spectral zeta function of the graph Laplacian (zero mode removed):
///   zeta(s) = 2 zeta_R(2s) pi^{-2s} (1 - l^{1-2s}) / (1 - 2l l^{-2s}).
/// l^{d_s} is taken as the integer 2l. The removable singularity at s = 1/2
/// is evaluated in closed form.
///
/// Throws PoleError within 1e-10 of a pole d_s/2 + i pi n / ln l.
Complex zeta_closed(const GraphSpec& g, Complex s);

/// The bracket (1 - l^{1-2s}) / (1 - 2l l^{-2s}) alone. As l grows it tends
/// to 1/2 for Re s < 1/2 and to 1 for Re s > 1/2.
Complex zeta_bracket(const GraphSpec& g, Complex s);

/// s_n = d_s/2 + i pi n / ln l, for any integer n.
Complex pole(const GraphSpec& g, int n);

/// Normalised residue weight
///   2 * [zeta_R(2 s_n) Gamma(s_n) pi^{-2 s_n}] / [same at s_0].
/// Real part is Delta_{Re,n}, imaginary part Delta_{Im,n}. Exactly 2 at n = 0;
/// n and -n give complex conjugates.
Complex pole_weight(const GraphSpec& g, int n);

/// zeta(0) = zeta_R(0) (2 - 2l) / (1 - 2l), the constant term of the trace.
double zeta_zero(const GraphSpec& g);

/// A_s = zeta_R(d_s) Gamma(d_s/2) pi^{-d_s} / (2 ln l), the coefficient of
/// t^{-d_s/2} in the heat trace.
double spectral_area(const GraphSpec& g);

/// sqrt(pi) / (2 pi ln 2): limit of spectral_area as l -> infinity.
double spectral_area_limit();

struct PoleTower {
  double s0 = 0.0;                 ///< d_s / 2
  double frequency = 0.0;          ///< pi / ln l, so Im s_n = n * frequency
  std::vector<Complex> poles;      ///< s_0 .. s_{n_max}
  std::vector<double> delta_re;
  std::vector<double> delta_im;
  double zeta0 = 0.0;
  double spectral_area = 0.0;

  int n_max() const { return static_cast<int>(poles.size()) - 1; }
};

PoleTower pole_tower(const GraphSpec& g, int n_max = kDefaultPoleOrders);

}  // namespace ramified
