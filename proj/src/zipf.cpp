#include "rankfreq/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rankfreq {

namespace {

std::string window_str(std::uint64_t lo, std::uint64_t hi) {
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

double sorted_median(const std::vector<double>& v) {
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

}  // namespace

ZipfFit fit_zipf(const FrequencyTable& table, std::uint64_t r_lo, std::uint64_t r_hi) {
  if (r_lo < 1 || r_hi <= r_lo) throw std::invalid_argument("fit_zipf: bad rank window");
  if (r_hi > table.vocabulary_size())
    throw InsufficientDataError("fit_zipf: window " + window_str(r_lo, r_hi) +
                                " exceeds vocabulary of " +
                                std::to_string(table.vocabulary_size()));

  ZipfFit fit;
  fit.r_lo = r_lo;
  fit.r_hi = r_hi;
  fit.min_count = std::numeric_limits<std::uint64_t>::max();

  std::vector<double> xs, ys;
  xs.reserve(r_hi - r_lo + 1);
  ys.reserve(r_hi - r_lo + 1);
  for (std::uint64_t r = r_lo; r <= r_hi; ++r) {
    const RankEntry& e = table.entries[r - 1];
    if (e.count == 0 || e.freq <= 0.0) {
      ++fit.n_excluded;
      continue;
    }
    xs.push_back(std::log(static_cast<double>(r)));
    ys.push_back(std::log(e.freq));
    fit.min_count = std::min(fit.min_count, e.count);
  }
  fit.n_used = xs.size();
  if (fit.n_used < 3)
    throw InsufficientDataError("fit_zipf: window " + window_str(r_lo, r_hi) + " has " +
                                std::to_string(fit.n_used) + " usable entries, need 3");

  double xbar = 0.0, ybar = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= static_cast<double>(xs.size());
  ybar /= static_cast<double>(ys.size());

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - xbar, dy = ys[i] - ybar;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  double slope = sxy / sxx;
  double intercept = ybar - slope * xbar;
  fit.z = -slope;
  fit.A = std::exp(intercept);

  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double resid = ys[i] - (intercept + slope * xs[i]);
    rss += resid * resid;
  }
  fit.rss = rss;
  fit.r2 = syy > 0.0 ? 1.0 - rss / syy : 1.0;
  return fit;
}

WindowSeries window_scan(const FrequencyTable& table, std::uint64_t width, std::uint64_t step) {
  if (width < 10 || step < 1) throw std::invalid_argument("window_scan: width >= 10, step >= 1");
  std::uint64_t vocab = table.vocabulary_size();
  if (vocab < width)
    throw InsufficientDataError("window_scan: vocabulary of " + std::to_string(vocab) +
                                " smaller than one window of " + std::to_string(width));

  WindowSeries series;
  series.window_width = width;
  series.step = step;
  for (std::uint64_t lo = 1; lo + width - 1 <= vocab; lo += step)
    series.fits.push_back(fit_zipf(table, lo, lo + width - 1));
  return series;
}

std::optional<KernelBoundary> detect_kernel_boundary(const WindowSeries& series,
                                                     const DetectOptions& options) {
  if (series.fits.size() < 3)
    throw InsufficientDataError("detect_kernel_boundary: need at least 3 windows");
  if (options.persistence < 1)
    throw std::invalid_argument("detect_kernel_boundary: persistence >= 1");

  // Usable prefix: once a window dips below the count floor, everything
  // after it sits on sparse-tail plateaus and is ignored.
  std::size_t usable = 0;
  while (usable < series.fits.size() &&
         series.fits[usable].min_count >= options.min_window_count)
    ++usable;
  if (usable < 3) return std::nullopt;

  std::vector<double> prior;  // exponents of windows before i, kept sorted
  prior.reserve(usable);
  auto add_prior = [&prior](double v) {
    prior.insert(std::upper_bound(prior.begin(), prior.end(), v), v);
  };
  add_prior(series.fits[0].z);
  add_prior(series.fits[1].z);

  for (std::size_t i = 2; i < usable; ++i) {
    double median = sorted_median(prior);
    double dev = series.fits[i].z - median;
    if (std::fabs(dev) > options.delta) {
      bool persists = true;
      for (std::size_t j = 1; j < static_cast<std::size_t>(options.persistence); ++j) {
        if (i + j >= usable) {
          persists = false;
          break;
        }
        double dev_j = series.fits[i + j].z - median;
        if (std::fabs(dev_j) <= options.delta || std::signbit(dev_j) != std::signbit(dev)) {
          persists = false;
          break;
        }
      }
      if (persists) {
        KernelBoundary b;
        b.r_max = (series.fits[i].r_lo + series.fits[i].r_hi) / 2;
        b.z_before = median;
        b.z_after = series.fits[i].z;
        b.method = BoundaryMethod::kWindowJump;
        return b;
      }
    }
    add_prior(series.fits[i].z);
  }
  return std::nullopt;
}

std::optional<KernelBoundary> detect_kernel_boundary(const WindowSeries& series, double delta) {
  DetectOptions options;
  options.delta = delta;
  return detect_kernel_boundary(series, options);
}

TwoSegmentFit fit_two_segment(const FrequencyTable& table, std::uint64_t r_lo,
                              std::uint64_t r_hi, std::uint64_t step) {
  if (r_lo < 1 || r_hi <= r_lo || step < 1)
    throw std::invalid_argument("fit_two_segment: bad arguments");
  if (r_hi > table.vocabulary_size() || r_hi - r_lo + 1 < 20)
    throw InsufficientDataError("fit_two_segment: need 20 entries in " +
                                window_str(r_lo, r_hi));

  constexpr std::uint64_t kMinSide = 10;
  TwoSegmentFit best;
  best.total_rss = std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::uint64_t b = (r_lo / step + 1) * step; b < r_hi; b += step) {
    if (b < r_lo + kMinSide - 1 || r_hi - b < kMinSide) continue;
    ZipfFit left = fit_zipf(table, r_lo, b);
    ZipfFit right = fit_zipf(table, b + 1, r_hi);
    double total = left.rss + right.rss;
    if (total < best.total_rss) {
      best.left = left;
      best.right = right;
      best.total_rss = total;
      best.boundary.r_max = b;
      found = true;
    }
  }
  if (!found)
    throw InsufficientDataError("fit_two_segment: no breakpoint candidates in " +
                                window_str(r_lo, r_hi) + " at step " + std::to_string(step));

  best.boundary.z_before = best.left.z;
  best.boundary.z_after = best.right.z;
  best.boundary.method = BoundaryMethod::kTwoSegment;
  best.boundary.degenerate = std::fabs(best.left.z - best.right.z) < 0.05;
  return best;
}

}  // namespace rankfreq
