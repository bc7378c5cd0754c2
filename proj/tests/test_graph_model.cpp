#include <catch2/catch_amalgamated.hpp>

#include "ramified/errors.hpp"
#include "ramified/graph_model.hpp"
#include "support.hpp"

using namespace ramified;
using ramified::testing::rel_err;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("graph dimensions", "[graph]") {
  const GraphSpec g3 = make_graph(3);
  CHECK(rel_err(g3.spectral_dim, 1.6309297535714574371) < 1e-15);
  CHECK(g3.hausdorff_dim == g3.spectral_dim);
  CHECK(g3.walk_dim * g3.spectral_dim == 2.0 * g3.hausdorff_dim);
  CHECK(g3.total_length == 1.0);
  CHECK(make_graph(4).spectral_dim == 1.5);
  CHECK(rel_err(make_graph(1'000'000).spectral_dim, 1.0501716659439968) < 1e-12);
  CHECK(std::fabs(make_graph(1'000'000).spectral_dim - spectral_dimension_limit()) < 0.06);
  CHECK(spectral_dimension_limit() == 1.0);
  CHECK_THROWS_AS(make_graph(2), DomainError);
  CHECK_THROWS_AS(make_graph(-5), DomainError);
}

TEST_CASE("spectral dimension decreases and stays in (1, 2)", "[graph][property]") {
  double prev = 2.0;
  for (int l = 3; l <= 10000; ++l) {
    const double ds = make_graph(l).spectral_dim;
    REQUIRE(ds < prev);
    REQUIRE(ds > 1.0);
    prev = ds;
  }
}

TEST_CASE("multiplicity recursion", "[graph][property]") {
  for (int l : {3, 4, 7, 50}) {
    CHECK(level_multiplicity(l, 0) == 2.0);
    CHECK(level_multiplicity(l, 1) / level_multiplicity(l, 0) == l);
    for (int k = 1; k < 8; ++k) CHECK(level_multiplicity(l, k + 1) / level_multiplicity(l, k) == 2.0 * l);
  }
}

TEST_CASE("small ladder enumeration", "[graph][ladder]") {
  const SpectralLadder lad(make_graph(3), 100.0, 1e-6);
  REQUIRE(lad.levels().size() == 2);
  CHECK(lad.levels()[0].n_count == 3);
  CHECK(lad.levels()[0].multiplicity == 2.0);
  CHECK(lad.levels()[1].n_count == 1);
  CHECK(lad.levels()[1].multiplicity == 6.0);
  CHECK(lad.entry_count() == 4);
  CHECK(lad.counting_function(100.0) == 2.0 * 3 + 6.0);
  CHECK(lad.counting_function(kPi * kPi * 0.999) == 0.0);
}

TEST_CASE("empty ladder still carries a bound", "[graph][ladder]") {
  const SpectralLadder lad(make_graph(3), 9.0, 1e-6);
  CHECK(lad.levels().empty());
  CHECK(lad.k_max() == -1);
  CHECK(lad.tail_bound() > 0.0);
  CHECK(lad.valid_from_time() > 0.0);
}

TEST_CASE("ladder preconditions", "[graph][ladder]") {
  const GraphSpec g = make_graph(3);
  CHECK_THROWS_AS(SpectralLadder(g, -1.0, 1e-6), DomainError);
  CHECK_THROWS_AS(SpectralLadder(g, 1e4, 0.0), DomainError);
  CHECK_THROWS_AS(SpectralLadder(g, 1e12, 1e-6, LadderLimits{1000}), ResourceError);
}

TEST_CASE("ladder zeta sum encloses 2/3 at l = 3", "[graph][ladder]") {
  const SpectralLadder lad(make_graph(3), 1e10, 1e-6);
  const LadderSum z = lad.zeta_sum(1.0);
  CHECK(std::fabs(z.value - 2.0 / 3.0) <= z.tail_bound);
  CHECK(z.tail_bound < 1e-6);
  CHECK_THROWS_AS(lad.zeta_sum(0.8), DomainError);
}

TEST_CASE("ladder heat sum stays within its bound", "[graph][ladder]") {
  // brute force: every level and index summed until the terms vanish
  const int l = 4;
  const SpectralLadder lad(make_graph(l), 2e4, 1e-10);
  for (double t : {1e-3, 1e-2, 0.1}) {
    long double exact = 0.0L;
    for (int k = 0; k < 12; ++k) {
      const long double m = k == 0 ? 2.0L : std::pow(2.0L * l, k);
      const long double base = std::pow(kPi * std::pow(l, k), 2);
      for (int n = 1; n < 400; ++n) exact += m * std::exp(-base * n * n * t);
    }
    const LadderSum h = lad.heat_sum(t);
    INFO("t = " << t);
    CHECK(std::fabs(h.value - static_cast<double>(exact)) <= h.tail_bound + 1e-13 * h.value);
  }
  CHECK(lad.heat_tail_bound(lad.valid_from_time()) <= 1e-10 * (1 + 1e-12));
}

TEST_CASE("eigenvalue count scales with the spectral dimension", "[graph][ladder][property]") {
  for (int l : {3, 5, 10}) {
    const GraphSpec g = make_graph(l);
    const SpectralLadder lad(g, 1e7, 1e-3);
    double lo = 1e300, hi = 0.0;
    for (double lam = 1e3; lam <= 1e7 * (1 + 1e-12); lam *= std::sqrt(10.0)) {
      const double ratio = lad.counting_function(lam) / std::pow(lam, 0.5 * g.spectral_dim);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    INFO("l = " << l << ", ratio range [" << lo << ", " << hi << "]");
    CHECK(hi / lo < 4.0);
  }
}
