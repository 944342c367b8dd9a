#ifndef RANKFREQ_PIPELINE_HPP
#define RANKFREQ_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rankfreq/extrapolate.hpp"
#include "rankfreq/freqtable.hpp"
#include "rankfreq/tokenizer.hpp"
#include "rankfreq/zipf.hpp"

namespace rankfreq {

// Functional styles a corpus file can be labeled with.
bool is_style_label(const std::string& label);

struct ManifestEntry {
  std::string path;  // relative paths resolve against the manifest file
  std::string style;
};

struct CorpusManifest {
  std::string name;
  std::vector<ManifestEntry> entries;
};

CorpusManifest load_manifest(const std::string& path);

// surface form -> lemma
using LemmaMap = std::unordered_map<std::string, std::string>;

// TSV `surface\tlemma`. Repeated surfaces must agree.
LemmaMap load_lemma_map(const std::string& path);
void apply_lemma_map(std::vector<Token>& tokens, const LemmaMap& map);

CleanConfig load_clean_config(const std::string& path);

std::string read_file(const std::string& path);

struct PipelineOptions {
  std::uint64_t window_width = 200;
  std::uint64_t window_step = 100;
  std::uint64_t entropy_n = 3000;
  DetectOptions detect;
  TGrid t_grid;
  bool overwrite = false;      // replace an existing out_dir instead of failing
  bool pretokenized = false;   // corpus files are token streams; skip cleaning
};

// Tokenizes every manifest file, then per style label and for the merged
// corpus writes freq.tsv, zipf.json, windows.tsv, kernel.json,
// entropy.json, extrapolation.json and loglog.tsv under
// out_dir/<style>/. The tree appears atomically: everything is staged in a
// temp directory and renamed into place, so a failed run leaves no partial
// output. Analyses that need more data than a tiny corpus offers degrade
// to an {"error": ...} report instead of failing the run.
void run_pipeline(const CorpusManifest& manifest, const CleanConfig& config,
                  const LemmaMap& lemma_map, const std::string& out_dir,
                  const PipelineOptions& options = {});

}  // namespace rankfreq

#endif
