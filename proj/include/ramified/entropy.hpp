#pragma once

#include <vector>

#include "ramified/graph_model.hpp"
#include "ramified/spectral_zeta.hpp"

namespace ramified {

/// Overall constant of the leading entropy.
///  - paper:   S_E = A_s / (d_s eps^{d_s})
///  - replica: S_E = [alpha d/dalpha - 1] W_alpha at alpha = 1
///             = A_s / (6 d_s eps^{d_s})
/// The two differ by exactly a factor 6.
enum class Convention { paper, replica };

/// Normalisation of the dimensionless entropy S_E eps^{d_s}.
///  - bracket: zeta_R(d_s) Gamma(d_s/2) / (2 ln 2l), which tends to
///             sqrt(pi) / (2 ln 2) as l -> infinity
///  - spectral_area: A_s / d_s, i.e. the bracket divided by pi^{d_s}
enum class TildeNormalization { bracket, spectral_area };

/// C(alpha) = (1 - alpha^2) / (6 alpha^2), the conical coefficient of the
/// two-dimensional cone heat trace. Throws DomainError for alpha <= 0.
double sommerfeld_c(double alpha);

/// W_alpha = A_s (alpha^2 - 1) / (12 alpha d_s eps^{d_s}), the effective
/// action from the non-oscillatory part of the trace.
double effective_action(const GraphSpec& g, double alpha, double epsilon);

/// [alpha d/dalpha - 1] W_alpha at alpha = 1, in closed form:
/// A_s / (6 d_s eps^{d_s}).
double replica_entropy(const GraphSpec& g, double epsilon);

double entropy_leading(const GraphSpec& g, double epsilon, Convention convention = Convention::paper);

/// Dimensionless entropy S_E eps^{d_s} plotted against l.
double entropy_tilde(const GraphSpec& g, TildeNormalization norm = TildeNormalization::bracket);

/// sqrt(pi) / (2 ln 2), the l -> infinity limit of the bracket normalisation.
double entropy_tilde_limit();

struct CorrectionCoefficients {
  int n = 1;
  double pi_c = 0.0;
  double pi_s = 0.0;
  double delta_re = 0.0;
  double delta_im = 0.0;
};

/// Frequency ratio 2 pi n / (d_s ln l) that damps the n-th correction.
double correction_ratio(const GraphSpec& g, int n);

/// Pi_c = (Delta_Re + b Delta_Im) / (1 + b^2),
/// Pi_s = (Delta_Im - b Delta_Re) / (1 + b^2), b = correction_ratio(g, n).
CorrectionCoefficients correction_coefficients(const GraphSpec& g, int n);
CorrectionCoefficients correction_coefficients(const GraphSpec& g, const PoleTower& tower, int n);

/// Phase n pi ln(eps^2) / ln l of the n-th log-periodic correction.
double correction_phase(const GraphSpec& g, int n, double epsilon);

struct CorrectionTerm {
  CorrectionCoefficients coefficients;
  double cos_term = 0.0;   ///< Pi_c cos(phase)
  double sin_term = 0.0;   ///< Pi_s sin(phase)
};

struct EntropyResult {
  int l = 0;
  double epsilon = 0.0;
  double d_s = 0.0;
  double leading = 0.0;
  double tilde = 0.0;
  std::vector<CorrectionTerm> corrections;
  double total = 0.0;
  Convention convention = Convention::paper;

  /// Sum of the oscillatory terms; total = leading * (1 + correction_sum()).
  double correction_sum() const;
};

/// Leading entropy times [1 + sum_{n=1}^{n_max} Pi_c cos(phi_n) + Pi_s sin(phi_n)].
EntropyResult entropy_full(const GraphSpec& g, double epsilon, int n_max,
                           Convention convention = Convention::paper,
                           TildeNormalization norm = TildeNormalization::bracket);

}  // namespace ramified
