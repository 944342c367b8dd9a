#ifndef RANKFREQ_ENTROPY_HPP
#define RANKFREQ_ENTROPY_HPP

#include <cstdint>

#include "rankfreq/freqtable.hpp"

namespace rankfreq {

struct EntropyResult {
  std::uint64_t N = 0;     // truncation rank actually requested
  double S = 0.0;          // nats
  double coverage = 0.0;   // total frequency mass of ranks 1..min(N, V)
};

// S = -sum_{r<=min(N,V)} f_r ln f_r over the table's relative frequencies.
// The tail is dropped, not renormalized; coverage says how much mass the
// truncation kept.
EntropyResult entropy(const FrequencyTable& table, std::uint64_t n = 3000);

}  // namespace rankfreq

#endif
