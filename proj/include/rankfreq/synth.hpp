#ifndef RANKFREQ_SYNTH_HPP
#define RANKFREQ_SYNTH_HPP

#include <cstdint>
#include <vector>

#include "rankfreq/tokenizer.hpp"

namespace rankfreq {

enum class LawKind {
  kZipf,           // p_r ∝ r^-z
  kPiecewiseZipf,  // exponent z1 up to break_rank, z2 after, continuous join
  kExtrapolation,  // p_r ∝ max(0, A - B·r^t)
};

struct GeneratorSpec {
  LawKind law = LawKind::kZipf;
  double z = 1.0;
  double z1 = 1.0;
  double z2 = 1.6;
  std::uint64_t break_rank = 800;
  double A = 0.04;
  double B = 0.01;
  double t = 0.1;
  std::uint64_t vocabulary_size = 1000;
  std::uint64_t sample_size = 100000;
  std::uint64_t seed = 0;
};

// Normalized probabilities for ranks 1..V under spec.law.
std::vector<double> law_probabilities(const GeneratorSpec& spec);

// sample_size independent draws by inverse CDF; word of rank r is "w<r>".
// Same seed, same stream — bit for bit, on any platform.
std::vector<Token> generate(const GeneratorSpec& spec);

}  // namespace rankfreq

#endif
