#pragma once

#include "ramified/entropy.hpp"
#include "ramified/graph_model.hpp"
#include "ramified/specfun.hpp"

// Quadrature oracles for the effective action. Nothing in this header is on
// the production path; tests and `corrections --verify` use it to check the
// closed forms in entropy.hpp.

namespace ramified::frullani {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-13;
  /// Upper integration limit in u = ln t is u0 + decay_span / (d_s / 2).
  double decay_span = 40.0;
};

struct Report {
  double value = 0.0;
  double error_estimate = 0.0;
  int pieces = 0;
};

/// W_alpha = -1/2 int_{eps^2}^inf dt/t (alpha C(alpha) / 2) K_Sigma(t), with
/// K_Sigma the pole expansion through order n_max minus its constant term.
/// Integrated in u = ln t, piecewise over half-periods of the fastest
/// oscillation. Throws QuadratureError when the accumulated error estimate
/// exceeds max(abs_tol, rel_tol |W|).
Report effective_action(const GraphSpec& g, double alpha, double epsilon, int n_max, Options opts = {});

/// Value-only form of effective_action.
double frullani_oracle(const GraphSpec& g, double alpha, double epsilon, int n_max, Options opts = {});

/// int_{u0}^inf exp(-decay u) exp(i frequency u) du by quadrature.
specfun::Complex log_time_integral(double decay, double frequency, double u0, Options opts = {});

/// Pi_c and Pi_s recovered from the numeric integral of the n-th oscillatory
/// trace term at cutoff epsilon:
///   Pi_c - i Pi_s = (Delta_Re - i Delta_Im) Q s_0 eps^{d_s} exp(-i phi_n).
CorrectionCoefficients correction_coefficients(const GraphSpec& g, int n, double epsilon = 0.1,
                                               Options opts = {});

/// Central finite difference of [alpha d/dalpha - 1] W_alpha at alpha = 1
/// applied to the quadrature W. Replica convention.
double replica_entropy(const GraphSpec& g, double epsilon, int n_max, double step = 1e-4,
                       Options opts = {});

}  // namespace ramified::frullani
