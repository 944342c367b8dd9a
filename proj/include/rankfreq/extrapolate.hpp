#ifndef RANKFREQ_EXTRAPOLATE_HPP
#define RANKFREQ_EXTRAPOLATE_HPP

#include <cstdint>
#include <stdexcept>

#include "rankfreq/freqtable.hpp"

namespace rankfreq {

class NoValidModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// f_r = A - B * r^t, hitting zero at r = R = (A/B)^(1/t). R estimates the
// vocabulary volume: the rank past which no new word is expected.
struct ExtrapolationModel {
  double A = 0.0;
  double B = 0.0;
  double t = 0.0;
  double R = 0.0;
  double rss = 0.0;
  std::uint64_t r_lo = 0;
  std::uint64_t r_hi = 0;
};

struct TGrid {
  double lo = 0.01;
  double hi = 0.5;
  double step = 0.005;
};

// Grid search over t; at each candidate A and B fall out of an ordinary
// least-squares line of f against r^t. Keeps the admissible (A > 0, B > 0)
// candidate with the smallest rss, ties going to the smaller t. Throws
// NoValidModelError when no candidate is admissible.
ExtrapolationModel fit_extrapolation(const FrequencyTable& table, std::uint64_t r_lo,
                                     std::uint64_t r_hi, const TGrid& grid = {});

double model_frequency(const ExtrapolationModel& model, double r);

// ceil(R) with a small tolerance so an analytically integer R stays put.
std::uint64_t predict_zero_rank(const ExtrapolationModel& model);

}  // namespace rankfreq

#endif
