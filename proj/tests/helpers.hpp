#ifndef RANKFREQ_TESTS_HELPERS_HPP
#define RANKFREQ_TESTS_HELPERS_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "rankfreq/freqtable.hpp"

namespace testutil {

// Diagnostic table with exact frequencies.  Counts are synthesized large so
// that count-based reliability filters never interfere with what a test is
// actually probing.
inline rankfreq::FrequencyTable table_from_freqs(const std::vector<double>& freqs,
                                                 std::uint64_t scale = 1000000000ull) {
  rankfreq::FrequencyTable t;
  t.corpus_size = scale;
  t.entries.reserve(freqs.size());
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    rankfreq::RankEntry e;
    e.rank = static_cast<std::uint64_t>(i + 1);
    e.word = "w" + std::to_string(i + 1);
    double c = std::llround(freqs[i] * static_cast<double>(scale));
    e.count = c < 1 ? 1 : static_cast<std::uint64_t>(c);
    e.freq = freqs[i];
    t.entries.push_back(std::move(e));
  }
  return t;
}

// Table with exact counts; frequencies derived from the count sum, which is
// what build_table itself produces.
inline rankfreq::FrequencyTable table_from_counts(const std::vector<std::uint64_t>& counts) {
  rankfreq::FrequencyTable t;
  t.corpus_size = 0;
  for (auto c : counts) t.corpus_size += c;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    rankfreq::RankEntry e;
    e.rank = static_cast<std::uint64_t>(i + 1);
    e.word = "w" + std::to_string(i + 1);
    e.count = counts[i];
    e.freq = static_cast<double>(counts[i]) / static_cast<double>(t.corpus_size);
    t.entries.push_back(std::move(e));
  }
  return t;
}

inline std::vector<double> zipf_freqs(double A, double z, std::size_t V) {
  std::vector<double> f(V);
  for (std::size_t r = 1; r <= V; ++r)
    f[r - 1] = A * std::pow(static_cast<double>(r), -z);
  return f;
}

// Two power-law segments, continuous at the break rank.
inline std::vector<double> piecewise_freqs(double A, double z1, double z2,
                                           std::uint64_t brk, std::size_t V) {
  std::vector<double> f(V);
  double join = A * std::pow(static_cast<double>(brk), z2 - z1);
  for (std::size_t r = 1; r <= V; ++r) {
    if (r <= brk)
      f[r - 1] = A * std::pow(static_cast<double>(r), -z1);
    else
      f[r - 1] = join * std::pow(static_cast<double>(r), -z2);
  }
  return f;
}

inline std::vector<double> extrapolation_freqs(double A, double B, double t, std::size_t V) {
  std::vector<double> f(V);
  for (std::size_t r = 1; r <= V; ++r)
    f[r - 1] = A - B * std::pow(static_cast<double>(r), t);
  return f;
}

}  // namespace testutil

#endif
