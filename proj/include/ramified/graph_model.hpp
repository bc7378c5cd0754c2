#pragma once

#include <cstdint>
#include <vector>

namespace ramified {

/// The diamond graph D_{2l,l}: every link is replaced by two parallel
/// branches of l edges each, so one link becomes 2l links at scale 1/l.
struct GraphSpec {
  int decimation = 3;            ///< l, at least 3
  double hausdorff_dim = 0.0;    ///< ln(2l) / ln(l)
  double spectral_dim = 0.0;     ///< equals hausdorff_dim since walk_dim = 2
  double walk_dim = 2.0;
  double total_length = 1.0;     ///< rescaled length of the initial link
  double embedding_dim = 0.0;    ///< (1 + spectral_dim) + 1, reporting only

  double log_l() const;
};

/// Builds the graph description for decimation factor l.
/// Throws DomainError for l < 3.
GraphSpec make_graph(int l);

/// d_s as l -> infinity: the unit line segment.
constexpr double spectral_dimension_limit() { return 1.0; }

/// Number of copies of the unit-segment Dirichlet spectrum at level k:
/// 2 for k = 0 and (2l)^k after that.
double level_multiplicity(int l, int k);

struct LadderLevel {
  int k = 0;
  double multiplicity = 0.0;   ///< exact integer value
  double base = 0.0;           ///< (pi l^k)^2; eigenvalues are n^2 * base
  std::int64_t n_count = 0;    ///< eigenvalue indices n = 1..n_count are listed
};

/// Value of a spectral sum together with an enclosure half-width.
struct LadderSum {
  double value = 0.0;
  double tail_bound = 0.0;
};

struct LadderLimits {
  std::int64_t max_entries = 100'000'000;
};

/// Truncated eigenvalue ladder of the graph Laplacian with the zero mode
/// removed. Eigenvalues are lambda_{n,k} = (pi n l^k)^2 with multiplicity
/// m_k; every pair (k, n) with lambda_{n,k} <= lambda_max is present.
class SpectralLadder {
 public:
  SpectralLadder(const GraphSpec& graph, double lambda_max, double target_tol,
                 LadderLimits limits = {});

  const GraphSpec& graph() const { return graph_; }
  const std::vector<LadderLevel>& levels() const { return levels_; }
  double lambda_max() const { return lambda_max_; }
  /// Highest populated level, -1 if the ladder is empty.
  int k_max() const { return static_cast<int>(levels_.size()) - 1; }
  std::int64_t entry_count() const { return entry_count_; }

  /// Smallest diffusion time at which the omitted heat-trace mass is below
  /// the requested tolerance, and that bound. For an empty ladder the bound
  /// is the full trace bound at that time.
  double valid_from_time() const { return valid_from_time_; }
  double tail_bound() const { return tail_bound_; }

  /// Eigenvalues <= lambda counted with multiplicity.
  double counting_function(double lambda) const;

  /// Sum of m_k * exp(-lambda t) over listed eigenvalues, with a rigorous
  /// bound on the omitted part.
  LadderSum heat_sum(double t) const;
  /// Rigorous bound on sum over unlisted eigenvalues of exp(-lambda t).
  double heat_tail_bound(double t) const;

  /// Sum of m_k * lambda^{-s} over the full spectrum for real s > d_s / 2.
  /// Listed entries are summed directly; the unlisted remainder is enclosed
  /// using convexity bounds on sum_{n > N} n^{-2s} and the geometric growth
  /// (2 l^{1-2s})^k of the level prefactors. `value` is the enclosure
  /// midpoint and `tail_bound` its half-width.
  LadderSum zeta_sum(double s) const;

 private:
  GraphSpec graph_;
  double lambda_max_;
  std::vector<LadderLevel> levels_;
  std::int64_t entry_count_ = 0;
  double valid_from_time_ = 0.0;
  double tail_bound_ = 0.0;
};

inline SpectralLadder ladder(const GraphSpec& graph, double lambda_max, double target_tol,
                             LadderLimits limits = {}) {
  return SpectralLadder(graph, lambda_max, target_tol, limits);
}

}  // namespace ramified
