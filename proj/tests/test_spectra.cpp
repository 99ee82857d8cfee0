#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ellrmt/analytic.hpp"
#include "ellrmt/spectra.hpp"

using namespace ellrmt;
using ellrmt::ensembles::EnsembleSpec;
using ellrmt::spectra::GridSpec;
using ellrmt::spectra::UnfoldedZeros;
constexpr double kPi = std::numbers::pi;

namespace {
ensembles::EigenangleSample make_sample(EnsembleSpec spec,
                                        std::vector<double> angles, int forced) {
  ensembles::EigenangleSample s;
  s.spec = spec;
  s.angles = std::move(angles);
  s.forced_zero_mult = forced;
  return s;
}

// the histogram estimates the bin average, so compare against that
double bin_average(double lo, double hi, double (*f)(double)) {
  const int n = 16;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += f(lo + (hi - lo) * (i + 0.5) / n);
  return s / n;
}
}  // namespace

TEST_CASE("unfold: SO(4) angle pi/2 lands at 1.0") {
  auto s = make_sample(EnsembleSpec::so_even(4), {kPi / 2, 2.0}, 0);
  auto z = spectra::unfold(s);
  CHECK(z.values[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(z.excluded_critical == 0);
}

TEST_CASE("unfold: forced zeros excluded and counted") {
  auto s = make_sample(EnsembleSpec::interaction(11, 3), {0.5, 0.9, 1.3, 2.0}, 3);
  auto z = spectra::unfold(s);
  CHECK(z.excluded_critical == 3);
  CHECK(z.values.size() == 4);
}

TEST_CASE("unfold linearity: scaling angles and M_total together is invariant") {
  auto a = make_sample(EnsembleSpec::so_even(8), {0.2, 0.5, 0.9, 1.5}, 0);
  auto b = make_sample(EnsembleSpec::so_even(16), {0.1, 0.25, 0.45, 0.75}, 0);
  auto za = spectra::unfold(a), zb = spectra::unfold(b);
  for (std::size_t i = 0; i < za.values.size(); ++i)
    CHECK(za.values[i] == doctest::Approx(zb.values[i]).epsilon(1e-12));
}

TEST_CASE("unfold: pooled mean spacing is 1 within 2%") {
  auto spec = EnsembleSpec::so_even(24);
  auto samples = ensembles::sample_many(spec, 4000, 8, 909, 4);
  double total = 0.0;
  std::int64_t count = 0;
  for (const auto& s : samples) {
    auto z = spectra::unfold(s);
    for (std::size_t i = 0; i + 1 < z.values.size(); ++i) {
      total += z.values[i + 1] - z.values[i];
      ++count;
    }
  }
  // consecutive-spacing mean over the bulk; edge effects are O(1/K)
  CHECK(std::fabs(total / count - 1.0) < 0.05);
  // sharper check: density over the full window equals 1/unit
  double lo_count = 0.0;
  for (const auto& s : samples) {
    auto z = spectra::unfold(s);
    for (double v : z.values)
      if (v < 6.0) lo_count += 1.0;
  }
  CHECK(std::fabs(lo_count / (samples.size() * 6.0) - 1.0) < 0.02);
}

TEST_CASE("unfold_lzeros: basic mapping and exclusion") {
  CHECK_THROWS(spectra::unfold_lzeros({1.0}, 0.0));
  double c = 7.3;
  auto z = spectra::unfold_lzeros({0.0, 2.0 * kPi / c, 4.0}, c);
  CHECK(z.excluded_critical == 1);
  REQUIRE(z.values.size() == 2);
  CHECK(z.values[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("one_level_density: counts, errors, and the integration identity") {
  GridSpec grid{0.0, 5.0, 50};
  std::vector<UnfoldedZeros> sets(4);
  sets[0].values = {0.05, 1.7, 2.3};
  sets[1].values = {0.05, 0.07, 4.9};
  sets[2].values = {3.3};
  sets[3].values = {4.0, 6.2};  // 6.2 outside the grid
  auto t = spectra::one_level_density(sets, grid);
  // first bin: counts 1, 2, 0, 0 over 4 sets, width 0.1
  CHECK(t.heights[0] == doctest::Approx((3.0 / 4.0) / 0.1));
  double total_in_grid = 3 + 3 + 1 + 1;
  CHECK(t.integral() == doctest::Approx(total_in_grid / 4.0).epsilon(1e-12));
  // permutation invariance
  std::vector<UnfoldedZeros> perm = {sets[2], sets[0], sets[3], sets[1]};
  auto t2 = spectra::one_level_density(perm, grid);
  for (int b = 0; b < grid.bins; ++b) {
    CHECK(t.heights[b] == t2.heights[b]);
    CHECK(t.stderrs[b] == t2.stderrs[b]);
  }
  CHECK_THROWS(spectra::one_level_density({}, grid));
}

TEST_CASE("one_level_density: matches so_even for sampled SO(2N)") {
  auto spec = EnsembleSpec::so_even(40);
  auto samples = ensembles::sample_many(spec, 4000, 8, 2718, 4);
  std::vector<UnfoldedZeros> sets;
  sets.reserve(samples.size());
  for (const auto& s : samples) sets.push_back(spectra::unfold(s));
  GridSpec grid{0.0, 5.0, 25};
  auto t = spectra::one_level_density(sets, grid);
  int bad = 0;
  for (int b = 0; b < grid.bins; ++b) {
    double expect = bin_average(t.edges[b], t.edges[b + 1], &analytic::so_even_density);
    double se = std::max(t.stderrs[b], 1.0 / (4000 * grid.width()));
    if (std::fabs(t.heights[b] - expect) > 5.0 * se) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("pair_correlation: counting example") {
  GridSpec grid{0.0, 3.0, 3};
  UnfoldedZeros z;
  z.values = {0.3, 0.8};
  auto t = spectra::pair_correlation({z}, grid);
  // one pair at distance 0.5, normalized by sets(1) x points(2) x width(1)
  CHECK(t.heights[0] == doctest::Approx(0.5));
  CHECK(t.heights[1] == 0.0);
}

TEST_CASE("pair_correlation: unitary matches the sine kernel") {
  auto spec = EnsembleSpec::unitary(40);
  auto samples = ensembles::sample_many(spec, 8000, 8, 1414, 4);
  std::vector<UnfoldedZeros> sets;
  for (const auto& s : samples) sets.push_back(spectra::unfold(s));
  GridSpec grid{0.0, 5.0, 25};
  auto t = spectra::pair_correlation(sets, grid);
  int bad = 0;
  for (int b = 0; b < grid.bins; ++b) {
    double expect = bin_average(t.edges[b], t.edges[b + 1], &analytic::sine_kernel_pc);
    double se = std::max(t.stderrs[b], 0.3 / (8000 * grid.width()));
    if (std::fabs(t.heights[b] - expect) > 5.0 * se) ++bad;
  }
  CHECK(bad == 0);
  // level repulsion at the origin
  CHECK(t.heights[0] < 0.2);
}

TEST_CASE("nn_spacing: counting example and normalization") {
  GridSpec grid{0.0, 2.0, 20};
  UnfoldedZeros z;
  z.values = {0.4, 1.1, 2.0};
  UnfoldedZeros tiny;
  tiny.values = {0.5};  // skipped: fewer than 2 values
  auto t = spectra::nn_spacing({z, tiny}, grid);
  CHECK(t.sample_count == 2);
  // spacings 0.7 and 0.9 (bins located through the same rounding as the
  // histogram, since 1.1 - 0.4 is not exactly representable)
  CHECK(t.heights[grid.bin_of(1.1 - 0.4)] == doctest::Approx(0.5 / 0.1));
  CHECK(t.heights[grid.bin_of(2.0 - 1.1)] == doctest::Approx(0.5 / 0.1));
  CHECK(t.integral() == doctest::Approx(1.0));
}

TEST_CASE("nn_spacing: sampled mean spacing 1, repulsion at 0") {
  // boundary bias of the windowed spacing mean decays like 1/K
  auto spec = EnsembleSpec::so_even(60);
  auto samples = ensembles::sample_many(spec, 2500, 8, 33, 4);
  std::vector<UnfoldedZeros> sets;
  for (const auto& s : samples) sets.push_back(spectra::unfold(s));
  // raw mean of the consecutive spacings is the unfolding contract
  double total = 0.0;
  std::int64_t count = 0;
  for (const auto& z : sets)
    for (std::size_t i = 0; i + 1 < z.values.size(); ++i) {
      total += z.values[i + 1] - z.values[i];
      ++count;
    }
  CHECK(std::fabs(total / count - 1.0) < 0.02);
  GridSpec grid{0.0, 4.0, 40};
  auto t = spectra::nn_spacing(sets, grid);
  CHECK(t.heights[0] < 0.05);
}

TEST_CASE("moment_estimator") {
  std::vector<double> c(64, 3.0);
  auto e1 = spectra::moment_estimator(c, 2);
  CHECK(e1.mean == doctest::Approx(9.0));
  CHECK(e1.stderr_ == doctest::Approx(0.0));
  // jackknife equals sd/sqrt(n) for the mean
  std::vector<double> v = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
  auto e2 = spectra::moment_estimator(v, 1);
  CHECK(e2.mean == doctest::Approx(3.5));
  CHECK(e2.stderr_ == doctest::Approx(std::sqrt(3.5 / 6.0)).epsilon(1e-12));
  CHECK_THROWS(spectra::moment_estimator({}, 1));
}

TEST_CASE("density table CSV serialization") {
  GridSpec grid{0.0, 1.0, 4};
  UnfoldedZeros z;
  z.values = {0.1, 0.3, 0.9};
  auto t = spectra::one_level_density({z}, grid);
  spectra::write_csv(t, "/tmp/ellrmt_table_test.csv");
  std::FILE* f = std::fopen("/tmp/ellrmt_table_test.csv", "r");
  REQUIRE(f != nullptr);
  char line[256];
  REQUIRE(std::fgets(line, sizeof line, f));
  CHECK(std::string(line) == "bin_left,bin_right,height,stderr\n");
  std::fclose(f);
}
