#include "ramified/graph_model.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "ramified/errors.hpp"
#include "ramified/specfun.hpp"

namespace ramified {
namespace {

using specfun::kPi;

double level_base(int l, int k) {
  const double scale = kPi * std::pow(static_cast<double>(l), k);
  return scale * scale;
}

// sum_{n >= m} exp(-a n^2) <= exp(-a m^2) / (1 - exp(-2 a m)), m >= 1.
double gaussian_tail(double a, std::int64_t m) {
  const double md = static_cast<double>(m);
  const double lead = std::exp(-a * md * md);
  if (lead == 0.0) return 0.0;
  return lead / -std::expm1(-2.0 * a * md);
}

// Enclosure of sum_{n > N} n^{-p} for p > 1, N >= 1, from convexity of x^{-p}:
//   int_N^inf x^{-p} dx - N^{-p}/2  <=  tail  <=  int_{N+1/2}^inf x^{-p} dx.
struct TailEnclosure {
  double lo;
  double hi;
};

TailEnclosure power_tail(double p, std::int64_t n) {
  const double nd = static_cast<double>(n);
  const double lo = std::pow(nd, 1.0 - p) / (p - 1.0) - 0.5 * std::pow(nd, -p);
  const double hi = std::pow(nd + 0.5, 1.0 - p) / (p - 1.0);
  return {lo, hi};
}

}  // namespace

double GraphSpec::log_l() const { return std::log(static_cast<double>(decimation)); }

GraphSpec make_graph(int l) {
  if (l < 3) {
    throw DomainError("decimation factor must satisfy l >= 3 (got " + std::to_string(l) + ")");
  }
  GraphSpec g;
  g.decimation = l;
  g.hausdorff_dim = std::log(2.0 * l) / std::log(static_cast<double>(l));
  g.spectral_dim = g.hausdorff_dim;
  g.walk_dim = 2.0;
  g.total_length = 1.0;
  g.embedding_dim = (1.0 + g.spectral_dim) + 1.0;
  return g;
}

double level_multiplicity(int l, int k) {
  if (k == 0) return 2.0;
  return std::pow(2.0 * l, k);
}

SpectralLadder::SpectralLadder(const GraphSpec& graph, double lambda_max, double target_tol,
                               LadderLimits limits)
    : graph_(graph), lambda_max_(lambda_max) {
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw DomainError("ladder: lambda_max must be positive and finite");
  }
  if (!(target_tol > 0.0)) throw DomainError("ladder: target_tol must be positive");

  const int l = graph.decimation;
  for (int k = 0;; ++k) {
    const double base = level_base(l, k);
    if (base > lambda_max) break;
    auto n_count = static_cast<std::int64_t>(std::floor(std::sqrt(lambda_max / base)));
    while (n_count > 0 && static_cast<double>(n_count) * static_cast<double>(n_count) * base > lambda_max) {
      --n_count;
    }
    while (static_cast<double>(n_count + 1) * static_cast<double>(n_count + 1) * base <= lambda_max) {
      ++n_count;
    }
    entry_count_ += n_count;
    if (entry_count_ > limits.max_entries) {
      throw ResourceError("ladder: entry count exceeds cap of " + std::to_string(limits.max_entries));
    }
    levels_.push_back({k, level_multiplicity(l, k), base, n_count});
  }

  // Smallest t with heat_tail_bound(t) <= target_tol; the bound decreases in t.
  double hi = 1.0;
  while (heat_tail_bound(hi) > target_tol) hi *= 2.0;
  double lo = hi;
  while (lo > 1e-300 && heat_tail_bound(lo) <= target_tol) lo *= 0.5;
  for (int iter = 0; iter < 200 && hi / lo > 1.0 + 1e-12; ++iter) {
    const double mid = std::sqrt(lo * hi);
    if (heat_tail_bound(mid) <= target_tol) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  valid_from_time_ = hi;
  tail_bound_ = heat_tail_bound(hi);
}

double SpectralLadder::counting_function(double lambda) const {
  const double cap = std::min(lambda, lambda_max_);
  double count = 0.0;
  for (const auto& level : levels_) {
    if (level.base > cap) break;
    auto n = static_cast<std::int64_t>(std::floor(std::sqrt(cap / level.base)));
    while (n > 0 && static_cast<double>(n) * static_cast<double>(n) * level.base > cap) --n;
    count += level.multiplicity * static_cast<double>(std::min(n, level.n_count));
  }
  return count;
}

double SpectralLadder::heat_tail_bound(double t) const {
  if (!(t > 0.0)) throw DomainError("heat_tail_bound: t must be positive");
  double bound = 0.0;
  for (const auto& level : levels_) {
    bound += level.multiplicity * gaussian_tail(level.base * t, level.n_count + 1);
  }
  // Unlisted levels: prefactors grow like (2l)^k while the Gaussian factor
  // decays like exp(-pi^2 l^{2k} t); stop once a term no longer registers.
  const int l = graph_.decimation;
  for (int k = static_cast<int>(levels_.size()); k < 4096; ++k) {
    const double term = level_multiplicity(l, k) * gaussian_tail(level_base(l, k) * t, 1);
    bound += term;
    if (!std::isfinite(level_base(l, k)) || term <= bound * 1e-18) break;
  }
  return bound;
}

LadderSum SpectralLadder::heat_sum(double t) const {
  if (!(t > 0.0)) throw DomainError("heat_sum: t must be positive");
  double value = 0.0;
  double terms = 0.0;
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    double level_sum = 0.0;
    for (std::int64_t n = it->n_count; n >= 1; --n) {
      const double nd = static_cast<double>(n);
      level_sum += std::exp(-it->base * nd * nd * t);
    }
    value += it->multiplicity * level_sum;
    terms += static_cast<double>(it->n_count);
  }
  const double rounding = (terms + 2.0) * DBL_EPSILON * value;
  return {value, heat_tail_bound(t) + rounding};
}

LadderSum SpectralLadder::zeta_sum(double s) const {
  const double p = 2.0 * s;
  if (!(p > graph_.spectral_dim)) {
    throw DomainError("zeta_sum: ladder sum converges only for s > d_s / 2");
  }
  const double l = static_cast<double>(graph_.decimation);

  // Level prefactors m_k (pi l^k)^{-2s}.
  auto prefactor = [&](const LadderLevel& level) { return level.multiplicity * std::pow(level.base, -s); };

  // One descending pass over the level-0 indices yields every level's partial
  // sum and the tail sum from each level's cut-off up to the deepest cut-off.
  const std::int64_t deepest = levels_.empty() ? 0 : levels_.front().n_count;
  std::vector<double> listed(levels_.size(), 0.0);
  std::vector<double> bridge(levels_.size(), 0.0);  // sum_{n = N_k + 1}^{deepest} n^{-p}
  double running = 0.0;
  std::size_t idx = 0;  // n_count is non-increasing in k
  for (std::int64_t n = deepest; n >= 1; --n) {
    while (idx < levels_.size() && levels_[idx].n_count == n) bridge[idx++] = running;
    running += std::pow(static_cast<double>(n), -p);
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) listed[i] = running - bridge[i];

  // Enclosure of the complete sum S = sum_{n >= 1} n^{-p}.
  double full_lo = 0.0;
  double full_hi = 0.0;
  if (deepest > 0) {
    const TailEnclosure tail = power_tail(p, deepest);
    full_lo = running + tail.lo;
    full_hi = running + tail.hi;
  } else {
    const TailEnclosure tail = power_tail(p, 1);
    full_lo = 1.0 + tail.lo;
    full_hi = 1.0 + tail.hi;
  }

  double value = 0.0;
  double rem_lo = 0.0;
  double rem_hi = 0.0;
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const double pre = prefactor(levels_[i]);
    value += pre * listed[i];
    rem_lo += pre * (full_lo - listed[i]);
    rem_hi += pre * (full_hi - listed[i]);
  }

  // Unlisted levels k > K: prefactor pi^{-p} (2l)^k l^{-pk} = pi^{-p} r^k for k >= 1.
  const int first_missing = static_cast<int>(levels_.size());
  const double r = 2.0 * std::pow(l, 1.0 - p);
  double missing = 0.0;
  if (first_missing == 0) {
    missing += 2.0 * std::pow(kPi, -p);
    missing += std::pow(kPi, -p) * r / (1.0 - r);
  } else {
    missing += std::pow(kPi, -p) * std::pow(r, first_missing) / (1.0 - r);
  }
  rem_lo += missing * full_lo;
  rem_hi += missing * full_hi;

  const double mid = value + 0.5 * (rem_lo + rem_hi);
  const double rounding = (static_cast<double>(deepest) + 8.0 * (levels_.size() + 1)) * DBL_EPSILON * mid;
  return {mid, 0.5 * (rem_hi - rem_lo) + rounding};
}

}  // namespace ramified
