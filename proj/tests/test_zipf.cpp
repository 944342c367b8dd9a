#include <cmath>
#include <optional>

#include "doctest.h"
#include "helpers.hpp"
#include "rankfreq/zipf.hpp"

using namespace rankfreq;
using testutil::piecewise_freqs;
using testutil::table_from_freqs;
using testutil::zipf_freqs;

namespace {

WindowSeries synthetic_series(const std::vector<double>& zs) {
  WindowSeries s;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    ZipfFit f;
    f.z = zs[i];
    f.r_lo = 1 + 100 * i;
    f.r_hi = f.r_lo + 199;
    f.min_count = 1000;
    s.fits.push_back(f);
  }
  return s;
}

}  // namespace

TEST_CASE("noiseless power law is recovered exactly") {
  for (double z : {1.0, 1.3}) {
    auto t = table_from_freqs(zipf_freqs(0.1, z, 1000));
    auto fit = fit_zipf(t, 1, 1000);
    CHECK(std::fabs(fit.z - z) < 1e-9);
    CHECK(std::fabs(fit.A - 0.1) / 0.1 < 1e-9);
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.rss < 1e-18);
    CHECK(fit.n_used == 1000);
    CHECK(fit.n_excluded == 0);
  }
}

TEST_CASE("fit is invariant under frequency rescaling") {
  auto f = zipf_freqs(0.05, 1.2, 600);
  auto fit1 = fit_zipf(table_from_freqs(f), 1, 600);
  for (auto& v : f) v *= 7.25;
  auto fit2 = fit_zipf(table_from_freqs(f), 1, 600);
  CHECK(std::fabs(fit1.z - fit2.z) < 1e-12);
  CHECK(std::fabs(fit2.A - 7.25 * fit1.A) / fit2.A < 1e-12);
}

TEST_CASE("fit metadata") {
  auto freqs = zipf_freqs(0.1, 1.0, 50);
  freqs[4] = 0.0;  // rank 5 carries no observations
  auto t = table_from_freqs(freqs);
  t.entries[4].count = 0;
  auto fit = fit_zipf(t, 1, 50);
  CHECK(fit.n_used == 49);
  CHECK(fit.n_excluded == 1);
  CHECK(fit.min_count == t.entries[49].count);
  CHECK(fit.r_lo == 1);
  CHECK(fit.r_hi == 50);
}

TEST_CASE("fit window validation") {
  auto t = table_from_freqs(zipf_freqs(0.1, 1.0, 400));
  CHECK_THROWS_AS(fit_zipf(t, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(fit_zipf(t, 10, 10), std::invalid_argument);
  CHECK_THROWS_AS(fit_zipf(t, 395, 405), InsufficientDataError);

  auto zeros = table_from_freqs({0.5, 0.0, 0.0, 0.0, 0.0});
  for (auto& e : zeros.entries) e.count = 0;
  zeros.entries[0].count = 1;
  CHECK_THROWS_AS(fit_zipf(zeros, 1, 5), InsufficientDataError);
}

TEST_CASE("window scan covers the whole table") {
  auto t = table_from_freqs(zipf_freqs(0.1, 1.0, 400));
  auto series = window_scan(t, 200, 100);
  REQUIRE(series.fits.size() == 3);
  CHECK(series.fits[0].r_lo == 1);
  CHECK(series.fits[0].r_hi == 200);
  CHECK(series.fits[1].r_lo == 101);
  CHECK(series.fits[1].r_hi == 300);
  CHECK(series.fits[2].r_lo == 201);
  CHECK(series.fits[2].r_hi == 400);
  CHECK(WindowSeries::center(series.fits[1]) == doctest::Approx(200.5));

  // V=401 adds nothing: next window [301,500] would overrun
  auto t2 = table_from_freqs(zipf_freqs(0.1, 1.0, 401));
  CHECK(window_scan(t2, 200, 100).fits.size() == 3);
}

TEST_CASE("window scan agrees with direct fits") {
  auto t = table_from_freqs(piecewise_freqs(0.1, 1.0, 1.6, 800, 2000));
  auto series = window_scan(t, 200, 100);
  for (const auto& w : series.fits) {
    auto direct = fit_zipf(t, w.r_lo, w.r_hi);
    CHECK(w.z == direct.z);
    CHECK(w.A == direct.A);
    CHECK(w.rss == direct.rss);
    CHECK(w.min_count == direct.min_count);
  }
}

TEST_CASE("window scan validation") {
  auto t = table_from_freqs(zipf_freqs(0.1, 1.0, 100));
  CHECK_THROWS_AS(window_scan(t, 5, 100), std::invalid_argument);
  CHECK_THROWS_AS(window_scan(t, 200, 0), std::invalid_argument);
  CHECK_THROWS_AS(window_scan(t, 200, 100), InsufficientDataError);
}

TEST_CASE("single regime: flat exponent series, no boundary") {
  auto t = table_from_freqs(zipf_freqs(0.1, 1.0, 2000));
  auto series = window_scan(t, 200, 100);
  for (const auto& w : series.fits) CHECK(std::fabs(w.z - 1.0) < 1e-6);
  CHECK_FALSE(detect_kernel_boundary(series).has_value());
  CHECK_FALSE(detect_kernel_boundary(series, 0.2).has_value());
}

TEST_CASE("planted regime change is located by the window jump") {
  auto t = table_from_freqs(piecewise_freqs(0.1, 1.0, 1.6, 800, 2000));
  auto b = detect_kernel_boundary(window_scan(t, 200, 100));
  REQUIRE(b.has_value());
  CHECK(b->method == BoundaryMethod::kWindowJump);
  CHECK(b->r_max == 800);
  CHECK(std::fabs(b->z_before - 1.0) < 1e-6);
  CHECK(b->z_after > b->z_before + 0.2);

  auto t2 = table_from_freqs(piecewise_freqs(0.1, 1.0, 1.6, 1600, 3000));
  auto b2 = detect_kernel_boundary(window_scan(t2, 200, 100));
  REQUIRE(b2.has_value());
  CHECK(b2->r_max == 1600);
}

TEST_CASE("detector needs three windows") {
  auto t = table_from_freqs(zipf_freqs(0.1, 1.0, 400));
  auto two = window_scan(t, 200, 200);  // [1,200] and [201,400]
  REQUIRE(two.fits.size() == 2);
  CHECK_THROWS_AS(detect_kernel_boundary(two), InsufficientDataError);
}

TEST_CASE("sparse-tail windows cannot testify") {
  // break sits where counts have fallen below the reliability floor, so the
  // detector must stay quiet instead of reporting it
  auto t = table_from_freqs(piecewise_freqs(0.1, 1.0, 1.8, 1500, 2000), 200000);
  auto series = window_scan(t, 200, 100);
  std::size_t reliable = 0;
  while (reliable < series.fits.size() && series.fits[reliable].min_count >= 30) ++reliable;
  CHECK(reliable >= 3);
  CHECK(series.fits[reliable - 1].r_hi < 1500);
  CHECK_FALSE(detect_kernel_boundary(series).has_value());

  // same shape with abundant counts is detected
  auto rich = table_from_freqs(piecewise_freqs(0.1, 1.0, 1.8, 1500, 2000));
  auto hit = detect_kernel_boundary(window_scan(rich, 200, 100));
  REQUIRE(hit.has_value());
  CHECK(hit->r_max == 1500);
}

TEST_CASE("persistence suppresses lone spikes") {
  auto spike = synthetic_series({1.0, 1.0, 1.02, 1.5, 1.0, 1.01, 0.99, 1.0});
  CHECK_FALSE(detect_kernel_boundary(spike).has_value());

  DetectOptions eager;
  eager.persistence = 1;
  auto b = detect_kernel_boundary(spike, eager);
  REQUIRE(b.has_value());
  CHECK(b->r_max == (301 + 500) / 2);

  // two deviations with opposite signs are noise, not a regime
  auto seesaw = synthetic_series({1.0, 1.0, 1.01, 1.5, 0.5, 1.0, 1.0});
  CHECK_FALSE(detect_kernel_boundary(seesaw).has_value());

  // a genuine sustained shift fires
  auto shift = synthetic_series({1.0, 1.0, 1.01, 1.45, 1.55, 1.6, 1.6});
  auto s = detect_kernel_boundary(shift);
  REQUIRE(s.has_value());
  CHECK(s->z_before == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(s->z_after == doctest::Approx(1.45));
}

TEST_CASE("two-segment fit finds a planted break") {
  auto t = table_from_freqs(piecewise_freqs(0.08, 1.0, 1.6, 1000, 3000));
  auto ts = fit_two_segment(t, 1, 3000);
  CHECK(ts.boundary.method == BoundaryMethod::kTwoSegment);
  CHECK_FALSE(ts.boundary.degenerate);
  CHECK(ts.boundary.r_max == 1000);
  CHECK(std::fabs(ts.left.z - 1.0) < 1e-9);
  CHECK(std::fabs(ts.right.z - 1.6) < 1e-9);
  CHECK(ts.total_rss < 1e-16);
  CHECK(ts.left.r_hi == 1000);
  CHECK(ts.right.r_lo == 1001);
}

TEST_CASE("two-segment fit on a single regime is degenerate") {
  auto t = table_from_freqs(zipf_freqs(0.1, 1.1, 1500));
  auto ts = fit_two_segment(t, 1, 1500);
  CHECK(ts.boundary.degenerate);
  CHECK(std::fabs(ts.left.z - ts.right.z) < 1e-6);
  CHECK(std::fabs(ts.left.z - 1.1) < 1e-6);
}

TEST_CASE("two-segment validation") {
  auto t = table_from_freqs(zipf_freqs(0.1, 1.0, 100));
  CHECK_THROWS_AS(fit_two_segment(t, 1, 15), InsufficientDataError);   // < 20 entries
  CHECK_THROWS_AS(fit_two_segment(t, 1, 300), InsufficientDataError);  // beyond vocab
  CHECK_THROWS_AS(fit_two_segment(t, 0, 100), std::invalid_argument);
  // [1,100] at step 100: the only multiple inside is far too close to the edge
  CHECK_THROWS_AS(fit_two_segment(t, 1, 100, 100), InsufficientDataError);
  // finer step succeeds
  auto ts = fit_two_segment(t, 1, 100, 20);
  CHECK(ts.boundary.degenerate);
}
