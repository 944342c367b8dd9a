#include "rankfreq/extrapolate.hpp"

#include "rankfreq/zipf.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace rankfreq {

ExtrapolationModel fit_extrapolation(const FrequencyTable& table, std::uint64_t r_lo,
                                     std::uint64_t r_hi, const TGrid& grid) {
  if (r_lo < 1 || r_hi <= r_lo) throw std::invalid_argument("fit_extrapolation: bad rank window");
  if (r_hi > table.vocabulary_size() || r_hi - r_lo + 1 < 10)
    throw InsufficientDataError("fit_extrapolation: need 10 entries in [" +
                                std::to_string(r_lo) + ", " + std::to_string(r_hi) + "]");
  if (!(grid.lo > 0.0) || grid.hi > 1.0 || grid.hi < grid.lo || !(grid.step > 0.0))
    throw std::invalid_argument("fit_extrapolation: t grid must lie in (0, 1]");

  std::size_t n = r_hi - r_lo + 1;
  std::vector<double> fs(n);
  double fbar = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    fs[i] = table.entries[r_lo - 1 + i].freq;
    fbar += fs[i];
  }
  fbar /= static_cast<double>(n);

  ExtrapolationModel best;
  best.r_lo = r_lo;
  best.r_hi = r_hi;
  best.rss = std::numeric_limits<double>::infinity();
  bool found = false;

  std::vector<double> us(n);
  long steps = std::lround((grid.hi - grid.lo) / grid.step);
  for (long k = 0; k <= steps; ++k) {
    double t = grid.lo + static_cast<double>(k) * grid.step;
    double ubar = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      us[i] = std::pow(static_cast<double>(r_lo + i), t);
      ubar += us[i];
    }
    ubar /= static_cast<double>(n);

    double suu = 0.0, suf = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double du = us[i] - ubar;
      suu += du * du;
      suf += du * (fs[i] - fbar);
    }
    double slope = suf / suu;       // f = intercept + slope * u
    double a = fbar - slope * ubar; // = A
    double b = -slope;              // = B
    if (!(a > 0.0) || !(b > 0.0)) continue;

    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double resid = fs[i] - (a - b * us[i]);
      rss += resid * resid;
    }
    if (rss < best.rss) {
      best.A = a;
      best.B = b;
      best.t = t;
      best.rss = rss;
      found = true;
    }
  }
  if (!found)
    throw NoValidModelError("fit_extrapolation: no t in the grid gives positive A and B");

  best.R = std::pow(best.A / best.B, 1.0 / best.t);
  return best;
}

double model_frequency(const ExtrapolationModel& model, double r) {
  return model.A - model.B * std::pow(r, model.t);
}

std::uint64_t predict_zero_rank(const ExtrapolationModel& model) {
  double r = model.R;
  if (!(r > 0.0)) return 1;
  if (r >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(r - 1e-9 * std::max(1.0, r)));
}

}  // namespace rankfreq
