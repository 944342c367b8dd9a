#include "rankfreq/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace rankfreq {

EntropyResult entropy(const FrequencyTable& table, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("entropy: N >= 1");
  EntropyResult result;
  result.N = n;
  std::uint64_t last = std::min<std::uint64_t>(n, table.vocabulary_size());
  for (std::uint64_t r = 1; r <= last; ++r) {
    double f = table.entries[r - 1].freq;
    if (f <= 0.0) continue;  // lim f->0 of f ln f
    result.S -= f * std::log(f);
    result.coverage += f;
  }
  return result;
}

}  // namespace rankfreq
