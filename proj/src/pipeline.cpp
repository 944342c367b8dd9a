#include "rankfreq/pipeline.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "rankfreq/entropy.hpp"
#include "rankfreq/report.hpp"

namespace fs = std::filesystem;

namespace rankfreq {

namespace {

const std::unordered_set<std::string>& style_labels() {
  static const std::unordered_set<std::string> labels = {
      "belles-lettres", "colloquial", "scientific", "official", "journalistic", "other"};
  return labels;
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
}

// The seven fixed report files for one (sub)corpus.
void write_reports(const FrequencyTable& table, const PipelineOptions& options,
                   const fs::path& dir) {
  {
    std::ostringstream buf;
    write_tsv(table, buf);
    write_text_file(dir / "freq.tsv", buf.str());
  }
  {
    std::ostringstream buf;
    write_loglog_tsv(table, buf);
    write_text_file(dir / "loglog.tsv", buf.str());
  }

  std::uint64_t vocab = table.vocabulary_size();
  if (vocab >= 3) {
    std::uint64_t cap = plateau_cap(table, 5);
    write_text_file(dir / "zipf.json",
                    zipf_fit_json(fit_zipf(table, 1, cap >= 3 ? cap : vocab)));
  } else {
    write_text_file(dir / "zipf.json", error_json("vocabulary too small for a fit"));
  }

  std::optional<KernelBoundary> boundary;
  try {
    WindowSeries series = window_scan(table, options.window_width, options.window_step);
    std::ostringstream buf;
    write_windows_tsv(series, buf);
    write_text_file(dir / "windows.tsv", buf.str());
    try {
      boundary = detect_kernel_boundary(series, options.detect);
      write_text_file(dir / "kernel.json", kernel_json(boundary));
    } catch (const InsufficientDataError& e) {
      write_text_file(dir / "kernel.json", error_json(e.what()));
    }
  } catch (const InsufficientDataError& e) {
    write_text_file(dir / "windows.tsv", "r_center\tz\tA\tr2\n");
    write_text_file(dir / "kernel.json", error_json(e.what()));
  }

  write_text_file(dir / "entropy.json", entropy_json(entropy(table, options.entropy_n)));

  // Tail model: start past the kernel if one was found, else past the top
  // ranks; fall back to the whole table when it is short.
  std::uint64_t r_lo = boundary ? boundary->r_max : 101;
  if (vocab < r_lo + 9) r_lo = 1;
  if (vocab < r_lo + 9) {
    write_text_file(dir / "extrapolation.json", error_json("too few ranks for the tail model"));
  } else {
    try {
      write_text_file(dir / "extrapolation.json",
                      extrapolation_json(fit_extrapolation(table, r_lo, vocab, options.t_grid)));
    } catch (const std::runtime_error& e) {
      write_text_file(dir / "extrapolation.json", error_json(e.what()));
    }
  }
}

FrequencyTable build_style_table(const std::vector<std::string>& paths,
                                 const CleanConfig& config, const LemmaMap& lemma_map,
                                 const std::string& style, bool pretokenized) {
  std::vector<Token> tokens;
  for (const std::string& path : paths) {
    std::vector<Token> part = pretokenized ? split_pretokenized(read_file(path))
                                           : tokenize(read_file(path), config).tokens;
    tokens.insert(tokens.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  tokens = apply_variant_merge(std::move(tokens), config);
  apply_lemma_map(tokens, lemma_map);
  if (tokens.empty())
    throw EmptyCorpusError("style \"" + style + "\" has no tokens after cleaning");
  return build_table(tokens);
}

}  // namespace

bool is_style_label(const std::string& label) { return style_labels().contains(label); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read file: " + path);
  return std::move(buf).str();
}

CorpusManifest load_manifest(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("manifest " + path + ": " + e.what());
  }
  CorpusManifest manifest;
  manifest.name = j.value("name", "corpus");
  if (!j.contains("entries") || !j["entries"].is_array())
    throw std::runtime_error("manifest " + path + ": needs an \"entries\" array");
  fs::path base = fs::path(path).parent_path();
  for (const auto& item : j["entries"]) {
    ManifestEntry entry;
    entry.path = item.at("path").get<std::string>();
    entry.style = item.at("style").get<std::string>();
    if (fs::path(entry.path).is_relative()) entry.path = (base / entry.path).string();
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

LemmaMap load_lemma_map(const std::string& path) {
  std::istringstream in(read_file(path));
  LemmaMap map;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
      throw std::runtime_error("lemma map " + path + ": bad line " + std::to_string(line_no));
    std::string surface = line.substr(0, tab);
    std::string lemma = line.substr(tab + 1);
    auto [it, inserted] = map.emplace(surface, lemma);
    if (!inserted && it->second != lemma)
      throw std::runtime_error("lemma map " + path + ": conflicting lemma for \"" + surface +
                               "\" at line " + std::to_string(line_no));
  }
  return map;
}

void apply_lemma_map(std::vector<Token>& tokens, const LemmaMap& map) {
  if (map.empty()) return;
  for (Token& token : tokens) {
    auto it = map.find(token);
    if (it != map.end()) token = it->second;
  }
}

CleanConfig load_clean_config(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  CleanConfig config;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "lowercase") {
        config.lowercase = value.get<bool>();
      } else if (key == "keep_internal_hyphen") {
        config.keep_internal_hyphen = value.get<bool>();
      } else if (key == "keep_apostrophe") {
        config.keep_apostrophe = value.get<bool>();
      } else if (key == "script_filter") {
        config.script_filter = script_filter_from_name(value.get<std::string>());
      } else if (key == "variant_merge_groups") {
        for (const auto& g : value) {
          VariantGroup group;
          group.canonical = g.at("canonical").get<std::string>();
          for (const auto& v : g.at("variants")) group.variants.push_back(v.get<std::string>());
          config.variant_merge_groups.push_back(std::move(group));
        }
      } else {
        throw ConfigError("config " + path + ": unknown key \"" + key + "\"");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  config.validate();
  return config;
}

void run_pipeline(const CorpusManifest& manifest, const CleanConfig& config,
                  const LemmaMap& lemma_map, const std::string& out_dir,
                  const PipelineOptions& options) {
  config.validate();
  if (manifest.entries.empty()) throw EmptyCorpusError("manifest lists no files");

  std::unordered_set<std::string> seen_paths;
  std::map<std::string, std::vector<std::string>> by_style;  // ordered for stable walk
  for (const ManifestEntry& entry : manifest.entries) {
    if (!is_style_label(entry.style))
      throw std::runtime_error("unknown style label \"" + entry.style + "\"");
    if (!seen_paths.insert(entry.path).second)
      throw std::runtime_error("manifest lists " + entry.path + " twice");
    by_style[entry.style].push_back(entry.path);
  }

  fs::path target = fs::path(out_dir);
  if (fs::exists(target) && !options.overwrite)
    throw std::runtime_error("output directory exists: " + out_dir);
  fs::path stage = target;
  stage += ".staging-" + std::to_string(::getpid());

  try {
    fs::create_directories(stage);

    std::vector<std::future<FrequencyTable>> futures;
    std::vector<std::string> styles;
    for (const auto& [style, paths] : by_style) {
      styles.push_back(style);
      futures.push_back(std::async(std::launch::async, [&, style, paths] {
        FrequencyTable table =
            build_style_table(paths, config, lemma_map, style, options.pretokenized);
        fs::create_directories(stage / style);
        write_reports(table, options, stage / style);
        return table;
      }));
    }

    std::vector<FrequencyTable> tables;
    tables.reserve(futures.size());
    for (auto& f : futures) tables.push_back(f.get());

    FrequencyTable merged = merge_tables(tables);
    fs::create_directories(stage / "merged");
    write_reports(merged, options, stage / "merged");

    if (fs::exists(target)) fs::remove_all(target);
    fs::rename(stage, target);
  } catch (...) {
    std::error_code ec;
    fs::remove_all(stage, ec);
    throw;
  }
}

}  // namespace rankfreq
