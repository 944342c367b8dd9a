#ifndef RANKFREQ_ZIPF_HPP
#define RANKFREQ_ZIPF_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rankfreq/freqtable.hpp"

namespace rankfreq {

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least-squares line through (ln r, ln f) over ranks [r_lo, r_hi]:
// f_r = A / r^z, rss and r2 measured in log-log space.
struct ZipfFit {
  double A = 0.0;
  double z = 0.0;
  std::uint64_t r_lo = 0;
  std::uint64_t r_hi = 0;
  double rss = 0.0;
  double r2 = 0.0;
  std::size_t n_used = 0;      // entries that entered the fit
  std::size_t n_excluded = 0;  // zero-frequency entries skipped
  std::uint64_t min_count = 0; // smallest count among used entries
};

struct WindowSeries {
  std::uint64_t window_width = 200;
  std::uint64_t step = 100;
  std::vector<ZipfFit> fits;  // ascending r_lo: [1,w], [1+s,w+s], ...

  static double center(const ZipfFit& f) {
    return (static_cast<double>(f.r_lo) + static_cast<double>(f.r_hi)) / 2.0;
  }
};

enum class BoundaryMethod { kWindowJump, kTwoSegment };

struct KernelBoundary {
  std::uint64_t r_max = 0;
  double z_before = 0.0;
  double z_after = 0.0;
  BoundaryMethod method = BoundaryMethod::kWindowJump;
  bool degenerate = false;  // two-segment: sides agree, no real break
};

ZipfFit fit_zipf(const FrequencyTable& table, std::uint64_t r_lo, std::uint64_t r_hi);

// One fit_zipf per window, scanning the whole table.
WindowSeries window_scan(const FrequencyTable& table, std::uint64_t width = 200,
                         std::uint64_t step = 100);

struct DetectOptions {
  double delta = 0.2;  // exponent jump that counts as a regime change
  // Windows whose rarest member occurs fewer times than this are too noisy
  // to testify (the exponent estimate degrades sharply below ~30) and end
  // the usable prefix of the series.
  std::uint64_t min_window_count = 30;
  // Consecutive windows that must deviate from the running median by more
  // than delta, with the same sign, before a boundary is declared. 1
  // reproduces the plain first-excursion rule; 2 suppresses lone noise
  // spikes that otherwise fire on single-regime samples.
  int persistence = 2;
};

// Walks the window series against the running median of prior exponents and
// reports the first persistent jump beyond delta. No boundary is a normal
// outcome, not an error.
std::optional<KernelBoundary> detect_kernel_boundary(const WindowSeries& series,
                                                     const DetectOptions& options = {});
std::optional<KernelBoundary> detect_kernel_boundary(const WindowSeries& series, double delta);

struct TwoSegmentFit {
  KernelBoundary boundary;  // method = kTwoSegment
  ZipfFit left;             // [r_lo, break]
  ZipfFit right;            // [break + 1, r_hi]
  double total_rss = 0.0;
};

// Exhaustive breakpoint search at step multiples inside (r_lo, r_hi),
// minimizing the summed rss of independent fits on each side. When the two
// exponents agree within 0.05 the boundary is flagged degenerate.
TwoSegmentFit fit_two_segment(const FrequencyTable& table, std::uint64_t r_lo,
                              std::uint64_t r_hi, std::uint64_t step = 100);

}  // namespace rankfreq

#endif
