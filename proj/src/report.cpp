#include "rankfreq/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace rankfreq {

namespace {
using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }
}  // namespace

std::string zipf_fit_json(const ZipfFit& fit) {
  ordered_json j;
  j["A"] = fit.A;
  j["z"] = fit.z;
  j["r_lo"] = fit.r_lo;
  j["r_hi"] = fit.r_hi;
  j["rss"] = fit.rss;
  j["r2"] = fit.r2;
  return dump(j);
}

const char* boundary_method_name(BoundaryMethod method) {
  return method == BoundaryMethod::kWindowJump ? "window-jump" : "two-segment";
}

std::string kernel_json(const std::optional<KernelBoundary>& boundary) {
  ordered_json j;
  j["found"] = boundary.has_value();
  if (boundary) {
    j["r_max"] = boundary->r_max;
    j["z_before"] = boundary->z_before;
    j["z_after"] = boundary->z_after;
    j["method"] = boundary_method_name(boundary->method);
    if (boundary->method == BoundaryMethod::kTwoSegment)
      j["degenerate"] = boundary->degenerate;
  }
  return dump(j);
}

std::string entropy_json(const EntropyResult& result) {
  ordered_json j;
  j["N"] = result.N;
  j["S"] = result.S;
  j["coverage"] = result.coverage;
  return dump(j);
}

std::string extrapolation_json(const ExtrapolationModel& model) {
  ordered_json j;
  j["A"] = model.A;
  j["B"] = model.B;
  j["t"] = model.t;
  j["R"] = model.R;
  j["rss"] = model.rss;
  j["r_lo"] = model.r_lo;
  j["r_hi"] = model.r_hi;
  return dump(j);
}

std::string error_json(const std::string& message) {
  ordered_json j;
  j["error"] = message;
  return dump(j);
}

void write_windows_tsv(const WindowSeries& series, std::ostream& out) {
  out << "r_center\tz\tA\tr2\n";
  char buf[128];
  for (const ZipfFit& fit : series.fits) {
    std::snprintf(buf, sizeof(buf), "%.10g\t%.10g\t%.10g\t%.10g\n",
                  WindowSeries::center(fit), fit.z, fit.A, fit.r2);
    out << buf;
  }
}

void write_loglog_tsv(const FrequencyTable& table, std::ostream& out) {
  out << "ln_r\tln_f\n";
  char buf[64];
  for (const RankEntry& e : table.entries) {
    if (e.freq <= 0.0) continue;
    std::snprintf(buf, sizeof(buf), "%.10g\t%.10g\n",
                  std::log(static_cast<double>(e.rank)), std::log(e.freq));
    out << buf;
  }
}

}  // namespace rankfreq
