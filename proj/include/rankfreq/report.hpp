#ifndef RANKFREQ_REPORT_HPP
#define RANKFREQ_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "rankfreq/entropy.hpp"
#include "rankfreq/extrapolate.hpp"
#include "rankfreq/freqtable.hpp"
#include "rankfreq/zipf.hpp"

namespace rankfreq {

// Serialized reports, newline-terminated. Key order and number formatting
// are fixed so identical inputs give identical bytes.
std::string zipf_fit_json(const ZipfFit& fit);
std::string kernel_json(const std::optional<KernelBoundary>& boundary);
std::string entropy_json(const EntropyResult& result);
std::string extrapolation_json(const ExtrapolationModel& model);
std::string error_json(const std::string& message);

const char* boundary_method_name(BoundaryMethod method);

// r_center, z, A, r2 per window.
void write_windows_tsv(const WindowSeries& series, std::ostream& out);
// ln r, ln f for every rank: the log-log plot data.
void write_loglog_tsv(const FrequencyTable& table, std::ostream& out);

}  // namespace rankfreq

#endif
