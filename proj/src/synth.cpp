#include "rankfreq/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace rankfreq {

std::vector<double> law_probabilities(const GeneratorSpec& spec) {
  if (spec.vocabulary_size < 1) throw std::invalid_argument("synth: vocabulary_size >= 1");
  std::uint64_t v = spec.vocabulary_size;
  std::vector<double> p(v);
  switch (spec.law) {
    case LawKind::kZipf:
      for (std::uint64_t r = 1; r <= v; ++r)
        p[r - 1] = std::pow(static_cast<double>(r), -spec.z);
      break;
    case LawKind::kPiecewiseZipf: {
      if (spec.break_rank < 1 || spec.break_rank >= v)
        throw std::invalid_argument("synth: break_rank must be inside 1..V");
      // Second segment scaled so the two power laws meet at the break.
      double join = std::pow(static_cast<double>(spec.break_rank), spec.z2 - spec.z1);
      for (std::uint64_t r = 1; r <= v; ++r)
        p[r - 1] = r <= spec.break_rank
                       ? std::pow(static_cast<double>(r), -spec.z1)
                       : join * std::pow(static_cast<double>(r), -spec.z2);
      break;
    }
    case LawKind::kExtrapolation:
      if (!(spec.A > 0.0) || !(spec.B > 0.0) || !(spec.t > 0.0))
        throw std::invalid_argument("synth: extrapolation law needs A, B, t > 0");
      for (std::uint64_t r = 1; r <= v; ++r)
        p[r - 1] = std::max(0.0, spec.A - spec.B * std::pow(static_cast<double>(r), spec.t));
      break;
  }
  double total = 0.0;
  for (double x : p) total += x;
  if (!(total > 0.0)) throw std::invalid_argument("synth: law has no probability mass");
  for (double& x : p) x /= total;
  return p;
}

std::vector<Token> generate(const GeneratorSpec& spec) {
  if (spec.sample_size < 1) throw std::invalid_argument("synth: sample_size >= 1");
  std::vector<double> p = law_probabilities(spec);
  std::vector<double> cum(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cum[i] = acc;
  }
  cum.back() = 1.0;

  std::vector<std::string> words(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) words[i] = "w" + std::to_string(i + 1);

  std::mt19937_64 rng(spec.seed);
  std::vector<Token> tokens;
  tokens.reserve(spec.sample_size);
  for (std::uint64_t i = 0; i < spec.sample_size; ++i) {
    // 53-bit uniform in [0, 1); avoids uniform_real_distribution, whose
    // output differs between standard libraries.
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (idx >= words.size()) idx = words.size() - 1;
    tokens.push_back(words[idx]);
  }
  return tokens;
}

}  // namespace rankfreq
