// rankfreq: corpus rank-frequency statistics from the command line.
//
// tokenize / freq / fit / windows / kernel / entropy / extrapolate work on
// raw text (positional files or stdin) or on a prebuilt frequency table
// (--table); translit converts between Cyrillic and Latin; synth samples a
// corpus from a known law; pipeline runs everything per style label.

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rankfreq/entropy.hpp"
#include "rankfreq/extrapolate.hpp"
#include "rankfreq/freqtable.hpp"
#include "rankfreq/pipeline.hpp"
#include "rankfreq/report.hpp"
#include "rankfreq/synth.hpp"
#include "rankfreq/tokenizer.hpp"
#include "rankfreq/translit.hpp"
#include "rankfreq/unicode.hpp"
#include "rankfreq/zipf.hpp"

namespace fs = std::filesystem;
namespace rf = rankfreq;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string config_path;
  std::string lemma_path;
  std::string out_dir;
  std::string format;
};

struct Input {
  std::vector<std::string> files;
  std::string table_path;
  bool pretokenized = false;
};

void add_common(CLI::App* cmd, Common& common, const std::string& default_format) {
  common.format = default_format;
  cmd->add_option("--config", common.config_path, "cleaning config JSON")
      ->check(CLI::ExistingFile);
  cmd->add_option("--lemma-map", common.lemma_path, "surface\\tlemma TSV")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out-dir", common.out_dir, "write the report file here instead of stdout");
  cmd->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));
}

void add_input(CLI::App* cmd, Input& input) {
  auto* files = cmd->add_option("files", input.files, "input text files (default: stdin)")
                    ->check(CLI::ExistingFile);
  cmd->add_option("--table", input.table_path, "prebuilt frequency table TSV")
      ->check(CLI::ExistingFile)
      ->excludes(files);
  cmd->add_flag("--pretokenized", input.pretokenized,
                "input is already one token per whitespace run; skip cleaning");
}

std::string read_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

rf::CleanConfig resolve_config(const std::string& flag_path) {
  if (!flag_path.empty()) return rf::load_clean_config(flag_path);
  const char* env = std::getenv("RANKFREQ_CONFIG");
  if (env && *env) return rf::load_clean_config(env);
  return {};
}

rf::LemmaMap resolve_lemma_map(const std::string& path) {
  return path.empty() ? rf::LemmaMap{} : rf::load_lemma_map(path);
}

rf::TokenizeResult gather_tokens(const Input& input, const Common& common) {
  rf::CleanConfig config = resolve_config(common.config_path);
  rf::TokenizeResult all;
  auto feed = [&](const std::string& text) {
    rf::TokenizeResult part;
    if (input.pretokenized) {
      part.tokens = rf::split_pretokenized(text);
      part.report.tokens_kept = part.tokens.size();
    } else {
      part = rf::tokenize(text, config);
    }
    all.report += part.report;
    all.tokens.insert(all.tokens.end(), std::make_move_iterator(part.tokens.begin()),
                      std::make_move_iterator(part.tokens.end()));
  };
  if (input.files.empty())
    feed(read_stdin());
  else
    for (const std::string& path : input.files) feed(rf::read_file(path));
  all.tokens = rf::apply_variant_merge(std::move(all.tokens), config);
  rf::apply_lemma_map(all.tokens, resolve_lemma_map(common.lemma_path));
  return all;
}

rf::FrequencyTable input_table(const Input& input, const Common& common) {
  if (!input.table_path.empty()) {
    std::ifstream in(input.table_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + input.table_path);
    return rf::read_tsv(in);
  }
  return rf::build_table(gather_tokens(input, common).tokens);
}

// Reports go to stdout unless --out-dir names a directory, in which case
// the canonical file appears there (whole file or nothing).
void emit(const Common& common, const std::string& name, const std::string& content) {
  if (common.out_dir.empty()) {
    std::cout << content;
    return;
  }
  fs::path dir(common.out_dir);
  fs::create_directories(dir);
  fs::path tmp = dir / (name + ".tmp-" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write " + (dir / name).string());
    }
  }
  fs::rename(tmp, dir / name);
}

ordered_json report_json(const rf::CleanReport& report) {
  ordered_json j;
  j["candidates_examined"] = report.candidates_examined();
  j["tokens_kept"] = report.tokens_kept;
  j["removed_numbers"] = report.removed_numbers;
  j["removed_number_words"] = report.removed_number_words;
  j["removed_foreign_script"] = report.removed_foreign_script;
  j["removed_punctuation_only"] = report.removed_punctuation_only;
  j["dashes_removed"] = report.dashes_removed;
  return j;
}

std::uint64_t default_fit_hi(const rf::FrequencyTable& table, std::uint64_t minimum) {
  std::uint64_t cap = rf::plateau_cap(table, 5);
  return cap >= minimum ? cap : table.vocabulary_size();
}

std::size_t utf8_advance(unsigned char lead) {
  return lead < 0x80 ? 1 : (lead >> 5) == 0x6 ? 2 : (lead >> 4) == 0xE ? 3 : 4;
}

std::string transform_chunk(const rf::TranslitTable& table, const std::string& chunk,
                            bool to_lat, bool skip_unsupported) {
  auto transform = [&](const std::string& s) {
    return to_lat ? table.to_latin(s) : table.from_latin(s);
  };
  if (!skip_unsupported) return transform(chunk);
  std::string out;
  std::size_t base = 0;
  while (base < chunk.size()) {
    try {
      out += transform(chunk.substr(base));
      break;
    } catch (const rf::TranslitError& e) {
      std::size_t bad = e.byte_offset();
      out += transform(chunk.substr(base, bad));
      std::size_t len = utf8_advance(static_cast<unsigned char>(chunk[base + bad]));
      out.append(chunk, base + bad, len);
      base += bad + len;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"corpus rank-frequency statistics toolkit"};
  app.require_subcommand(1);

  // --- tokenize ---
  auto* tokenize_cmd = app.add_subcommand("tokenize", "clean raw text into tokens");
  auto tokenize_common = std::make_shared<Common>();
  auto tokenize_input = std::make_shared<Input>();
  add_common(tokenize_cmd, *tokenize_common, "tsv");
  tokenize_cmd->add_option("files", tokenize_input->files, "input text files (default: stdin)")
      ->check(CLI::ExistingFile);
  tokenize_cmd->callback([tokenize_common, tokenize_input] {
    rf::TokenizeResult result = gather_tokens(*tokenize_input, *tokenize_common);
    if (tokenize_common->format == "json") {
      ordered_json j;
      j["tokens"] = result.tokens;
      j["report"] = report_json(result.report);
      emit(*tokenize_common, "tokens.json", j.dump(2) + "\n");
    } else {
      std::string content;
      for (const rf::Token& t : result.tokens) {
        content += t;
        content += '\n';
      }
      emit(*tokenize_common, "tokens.txt", content);
      std::cerr << report_json(result.report).dump() << "\n";
    }
  });

  // --- freq ---
  auto* freq_cmd = app.add_subcommand("freq", "build the rank-frequency table");
  auto freq_common = std::make_shared<Common>();
  auto freq_input = std::make_shared<Input>();
  add_common(freq_cmd, *freq_common, "tsv");
  add_input(freq_cmd, *freq_input);
  auto freq_top = std::make_shared<std::uint64_t>(0);
  freq_cmd->add_option("--top", *freq_top, "keep only the first K ranks");
  freq_cmd->callback([freq_common, freq_input, freq_top] {
    rf::FrequencyTable table = input_table(*freq_input, *freq_common);
    if (*freq_top > 0) {
      table.entries = rf::top_k(table, *freq_top);
    }
    if (freq_common->format == "json") {
      ordered_json j;
      j["corpus_size"] = table.corpus_size;
      j["vocabulary_size"] = table.vocabulary_size();
      ordered_json rows = ordered_json::array();
      for (const rf::RankEntry& e : table.entries) {
        ordered_json row;
        row["rank"] = e.rank;
        row["word"] = e.word;
        row["count"] = e.count;
        row["freq"] = e.freq;
        rows.push_back(std::move(row));
      }
      j["entries"] = std::move(rows);
      emit(*freq_common, "freq.json", j.dump(2) + "\n");
    } else {
      std::ostringstream buf;
      rf::write_tsv(table, buf);
      emit(*freq_common, "freq.tsv", buf.str());
    }
  });

  // --- fit ---
  auto* fit_cmd = app.add_subcommand("fit", "least-squares power-law fit in log-log space");
  auto fit_common = std::make_shared<Common>();
  auto fit_input = std::make_shared<Input>();
  add_common(fit_cmd, *fit_common, "json");
  add_input(fit_cmd, *fit_input);
  auto fit_lo = std::make_shared<std::uint64_t>(1);
  auto fit_hi = std::make_shared<std::uint64_t>(0);
  fit_cmd->add_option("--r-lo", *fit_lo, "first rank of the fit window");
  fit_cmd->add_option("--r-hi", *fit_hi,
                      "last rank of the fit window (default: last rank with count >= 5)");
  fit_cmd->callback([fit_common, fit_input, fit_lo, fit_hi] {
    rf::FrequencyTable table = input_table(*fit_input, *fit_common);
    std::uint64_t hi = *fit_hi ? *fit_hi : default_fit_hi(table, *fit_lo + 2);
    rf::ZipfFit fit = rf::fit_zipf(table, *fit_lo, hi);
    if (fit_common->format == "tsv") {
      char buf[256];
      std::snprintf(buf, sizeof(buf), "A\tz\tr_lo\tr_hi\trss\tr2\n%.10g\t%.10g\t%llu\t%llu\t%.10g\t%.10g\n",
                    fit.A, fit.z, static_cast<unsigned long long>(fit.r_lo),
                    static_cast<unsigned long long>(fit.r_hi), fit.rss, fit.r2);
      emit(*fit_common, "zipf.tsv", buf);
    } else {
      emit(*fit_common, "zipf.json", rf::zipf_fit_json(fit));
    }
  });

  // --- windows ---
  auto* windows_cmd = app.add_subcommand("windows", "sliding-window exponent scan");
  auto windows_common = std::make_shared<Common>();
  auto windows_input = std::make_shared<Input>();
  add_common(windows_cmd, *windows_common, "tsv");
  add_input(windows_cmd, *windows_input);
  auto windows_width = std::make_shared<std::uint64_t>(200);
  auto windows_step = std::make_shared<std::uint64_t>(100);
  windows_cmd->add_option("--window-width", *windows_width, "ranks per window");
  windows_cmd->add_option("--window-step", *windows_step, "rank offset between windows");
  windows_cmd->callback([windows_common, windows_input, windows_width, windows_step] {
    rf::FrequencyTable table = input_table(*windows_input, *windows_common);
    rf::WindowSeries series = rf::window_scan(table, *windows_width, *windows_step);
    if (windows_common->format == "json") {
      ordered_json j;
      j["window_width"] = series.window_width;
      j["step"] = series.step;
      ordered_json rows = ordered_json::array();
      for (const rf::ZipfFit& f : series.fits) {
        ordered_json row;
        row["r_center"] = rf::WindowSeries::center(f);
        row["r_lo"] = f.r_lo;
        row["r_hi"] = f.r_hi;
        row["z"] = f.z;
        row["A"] = f.A;
        row["r2"] = f.r2;
        rows.push_back(std::move(row));
      }
      j["windows"] = std::move(rows);
      emit(*windows_common, "windows.json", j.dump(2) + "\n");
    } else {
      std::ostringstream buf;
      rf::write_windows_tsv(series, buf);
      emit(*windows_common, "windows.tsv", buf.str());
    }
  });

  // --- kernel ---
  auto* kernel_cmd = app.add_subcommand("kernel", "kernel-vocabulary boundary detection");
  auto kernel_common = std::make_shared<Common>();
  auto kernel_input = std::make_shared<Input>();
  add_common(kernel_cmd, *kernel_common, "json");
  add_input(kernel_cmd, *kernel_input);
  auto kernel_method = std::make_shared<std::string>("window-jump");
  auto kernel_opts = std::make_shared<rf::DetectOptions>();
  auto kernel_width = std::make_shared<std::uint64_t>(200);
  auto kernel_step = std::make_shared<std::uint64_t>(100);
  auto kernel_lo = std::make_shared<std::uint64_t>(1);
  auto kernel_hi = std::make_shared<std::uint64_t>(0);
  kernel_cmd->add_option("--method", *kernel_method, "detector")
      ->check(CLI::IsMember({"window-jump", "two-segment"}));
  kernel_cmd->add_option("--delta", kernel_opts->delta, "exponent jump threshold");
  kernel_cmd->add_option("--min-window-count", kernel_opts->min_window_count,
                         "smallest usable in-window count");
  kernel_cmd->add_option("--persistence", kernel_opts->persistence,
                         "windows the jump must persist for");
  kernel_cmd->add_option("--window-width", *kernel_width, "ranks per window");
  kernel_cmd->add_option("--window-step", *kernel_step, "rank offset between windows");
  kernel_cmd->add_option("--r-lo", *kernel_lo, "two-segment: first rank");
  kernel_cmd->add_option("--r-hi", *kernel_hi,
                         "two-segment: last rank (default: last rank with count >= 5)");
  kernel_cmd->callback([kernel_common, kernel_input, kernel_method, kernel_opts, kernel_width,
                        kernel_step, kernel_lo, kernel_hi] {
    rf::FrequencyTable table = input_table(*kernel_input, *kernel_common);
    if (*kernel_method == "window-jump") {
      rf::WindowSeries series = rf::window_scan(table, *kernel_width, *kernel_step);
      emit(*kernel_common, "kernel.json",
           rf::kernel_json(rf::detect_kernel_boundary(series, *kernel_opts)));
    } else {
      std::uint64_t hi = *kernel_hi ? *kernel_hi : default_fit_hi(table, *kernel_lo + 19);
      rf::TwoSegmentFit two = rf::fit_two_segment(table, *kernel_lo, hi, *kernel_step);
      ordered_json j;
      j["found"] = !two.boundary.degenerate;
      j["r_max"] = two.boundary.r_max;
      j["z_before"] = two.boundary.z_before;
      j["z_after"] = two.boundary.z_after;
      j["method"] = rf::boundary_method_name(two.boundary.method);
      j["degenerate"] = two.boundary.degenerate;
      j["total_rss"] = two.total_rss;
      j["left"] = ordered_json::parse(rf::zipf_fit_json(two.left));
      j["right"] = ordered_json::parse(rf::zipf_fit_json(two.right));
      emit(*kernel_common, "kernel.json", j.dump(2) + "\n");
    }
  });

  // --- entropy ---
  auto* entropy_cmd = app.add_subcommand("entropy", "truncated frequency entropy");
  auto entropy_common = std::make_shared<Common>();
  auto entropy_input = std::make_shared<Input>();
  add_common(entropy_cmd, *entropy_common, "tsv");
  add_input(entropy_cmd, *entropy_input);
  auto entropy_n = std::make_shared<std::uint64_t>(3000);
  auto entropy_bits = std::make_shared<bool>(false);
  entropy_cmd->add_option("--entropy-n", *entropy_n, "truncation rank N");
  entropy_cmd->add_flag("--bits", *entropy_bits, "report in bits instead of nats");
  entropy_cmd->callback([entropy_common, entropy_input, entropy_n, entropy_bits] {
    rf::FrequencyTable table = input_table(*entropy_input, *entropy_common);
    rf::EntropyResult result = rf::entropy(table, *entropy_n);
    if (*entropy_bits) result.S /= std::log(2.0);
    const char* unit = *entropy_bits ? "bits" : "nats";
    if (entropy_common->format == "json") {
      ordered_json j = ordered_json::parse(rf::entropy_json(result));
      j["unit"] = unit;
      emit(*entropy_common, "entropy.json", j.dump(2) + "\n");
    } else {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "N=%llu S=%.6f coverage=%.6f (%s)\n",
                    static_cast<unsigned long long>(result.N), result.S, result.coverage, unit);
      emit(*entropy_common, "entropy.txt", buf);
    }
  });

  // --- extrapolate ---
  auto* extr_cmd = app.add_subcommand("extrapolate", "tail model and vocabulary volume R");
  auto extr_common = std::make_shared<Common>();
  auto extr_input = std::make_shared<Input>();
  add_common(extr_cmd, *extr_common, "json");
  add_input(extr_cmd, *extr_input);
  auto extr_lo = std::make_shared<std::uint64_t>(0);
  auto extr_hi = std::make_shared<std::uint64_t>(0);
  auto extr_grid = std::make_shared<rf::TGrid>();
  extr_cmd->add_option("--r-lo", *extr_lo, "first rank (default: past the top ranks)");
  extr_cmd->add_option("--r-hi", *extr_hi, "last rank (default: whole table)");
  extr_cmd->add_option("--t-lo", extr_grid->lo, "grid start");
  extr_cmd->add_option("--t-hi", extr_grid->hi, "grid end");
  extr_cmd->add_option("--t-step", extr_grid->step, "grid step");
  extr_cmd->callback([extr_common, extr_input, extr_lo, extr_hi, extr_grid] {
    rf::FrequencyTable table = input_table(*extr_input, *extr_common);
    std::uint64_t vocab = table.vocabulary_size();
    std::uint64_t hi = *extr_hi ? *extr_hi : vocab;
    std::uint64_t lo = *extr_lo ? *extr_lo : (hi >= 110 ? 101 : 1);
    rf::ExtrapolationModel model = rf::fit_extrapolation(table, lo, hi, *extr_grid);
    if (extr_common->format == "tsv") {
      char buf[320];
      std::snprintf(buf, sizeof(buf),
                    "A\tB\tt\tR\trss\tr_lo\tr_hi\n%.10g\t%.10g\t%.10g\t%.10g\t%.10g\t%llu\t%llu\n",
                    model.A, model.B, model.t, model.R, model.rss,
                    static_cast<unsigned long long>(model.r_lo),
                    static_cast<unsigned long long>(model.r_hi));
      emit(*extr_common, "extrapolation.tsv", buf);
    } else {
      emit(*extr_common, "extrapolation.json", rf::extrapolation_json(model));
    }
  });

  // --- translit ---
  auto* translit_cmd = app.add_subcommand("translit", "Cyrillic <-> Latin transliteration");
  auto translit_dir = std::make_shared<std::string>("to-latin");
  auto translit_table_path = std::make_shared<std::string>();
  auto translit_skip = std::make_shared<bool>(false);
  auto translit_files = std::make_shared<std::vector<std::string>>();
  translit_cmd->add_option("--direction", *translit_dir, "conversion direction")
      ->check(CLI::IsMember({"to-latin", "from-latin"}));
  translit_cmd->add_option("--table", *translit_table_path, "substitution table TSV")
      ->check(CLI::ExistingFile);
  translit_cmd->add_flag("--skip-unsupported", *translit_skip,
                         "copy unsupported characters through instead of failing");
  translit_cmd->add_option("files", *translit_files, "input files (default: stdin)")
      ->check(CLI::ExistingFile);
  translit_cmd->callback([translit_dir, translit_table_path, translit_skip, translit_files] {
    rf::TranslitTable custom = translit_table_path->empty()
                                   ? rf::TranslitTable::builtin()
                                   : [&] {
                                       std::ifstream in(*translit_table_path, std::ios::binary);
                                       if (!in)
                                         throw std::runtime_error("cannot read file: " +
                                                                  *translit_table_path);
                                       return rf::TranslitTable::from_tsv(in);
                                     }();
    std::string text;
    if (translit_files->empty())
      text = read_stdin();
    else
      for (const std::string& path : *translit_files) text += rf::read_file(path);

    bool to_lat = *translit_dir == "to-latin";
    std::u32string cps = rf::decode_utf8(text);
    std::string out, chunk;
    auto flush = [&] {
      if (!chunk.empty()) {
        out += transform_chunk(custom, chunk, to_lat, *translit_skip);
        chunk.clear();
      }
    };
    for (char32_t cp : cps) {
      if (rf::is_whitespace(cp)) {
        flush();
        rf::append_utf8(out, cp);
      } else {
        rf::append_utf8(chunk, cp);
      }
    }
    flush();
    std::cout << out;
  });

  // --- synth ---
  auto* synth_cmd = app.add_subcommand("synth", "sample a corpus from a known law");
  auto synth_spec = std::make_shared<rf::GeneratorSpec>();
  auto synth_law = std::make_shared<std::string>("zipf");
  auto synth_out = std::make_shared<std::string>();
  synth_cmd->add_option("--law", *synth_law, "frequency law")
      ->check(CLI::IsMember({"zipf", "piecewise", "extrapolation"}));
  synth_cmd->add_option("--z", synth_spec->z, "zipf exponent");
  synth_cmd->add_option("--z1", synth_spec->z1, "piecewise: exponent below the break");
  synth_cmd->add_option("--z2", synth_spec->z2, "piecewise: exponent above the break");
  synth_cmd->add_option("--break-rank", synth_spec->break_rank, "piecewise: regime change rank");
  synth_cmd->add_option("--A", synth_spec->A, "extrapolation law A");
  synth_cmd->add_option("--B", synth_spec->B, "extrapolation law B");
  synth_cmd->add_option("--t", synth_spec->t, "extrapolation law t");
  synth_cmd->add_option("--vocab", synth_spec->vocabulary_size, "vocabulary size V");
  synth_cmd->add_option("--tokens", synth_spec->sample_size, "tokens to draw");
  synth_cmd->add_option("--seed", synth_spec->seed, "RNG seed");
  synth_cmd->add_option("--out", *synth_out, "output file (default: stdout)");
  synth_cmd->callback([synth_spec, synth_law, synth_out] {
    synth_spec->law = *synth_law == "zipf"        ? rf::LawKind::kZipf
                      : *synth_law == "piecewise" ? rf::LawKind::kPiecewiseZipf
                                                  : rf::LawKind::kExtrapolation;
    std::vector<rf::Token> tokens = rf::generate(*synth_spec);
    std::string content;
    content.reserve(tokens.size() * 8);
    for (const rf::Token& t : tokens) {
      content += t;
      content += '\n';
    }
    if (synth_out->empty()) {
      std::cout << content;
    } else {
      fs::path target(*synth_out);
      if (target.has_parent_path()) fs::create_directories(target.parent_path());
      fs::path tmp = target;
      tmp += ".tmp-" + std::to_string(::getpid());
      {
        std::ofstream out(tmp, std::ios::binary);
        out << content;
        if (!out) {
          std::error_code ec;
          fs::remove(tmp, ec);
          throw std::runtime_error("cannot write " + *synth_out);
        }
      }
      fs::rename(tmp, target);
    }
  });

  // --- pipeline ---
  auto* pipe_cmd = app.add_subcommand("pipeline", "full per-style report bundle");
  auto pipe_common = std::make_shared<Common>();
  auto pipe_manifest = std::make_shared<std::string>();
  auto pipe_options = std::make_shared<rf::PipelineOptions>();
  add_common(pipe_cmd, *pipe_common, "tsv");
  pipe_cmd->add_option("--manifest", *pipe_manifest, "corpus manifest JSON")
      ->required()
      ->check(CLI::ExistingFile);
  pipe_cmd->add_option("--window-width", pipe_options->window_width, "ranks per window");
  pipe_cmd->add_option("--window-step", pipe_options->window_step, "rank offset between windows");
  pipe_cmd->add_option("--entropy-n", pipe_options->entropy_n, "entropy truncation rank");
  pipe_cmd->add_option("--delta", pipe_options->detect.delta, "exponent jump threshold");
  pipe_cmd->add_option("--min-window-count", pipe_options->detect.min_window_count,
                       "smallest usable in-window count");
  pipe_cmd->add_option("--persistence", pipe_options->detect.persistence,
                       "windows the jump must persist for");
  pipe_cmd->add_option("--t-lo", pipe_options->t_grid.lo, "extrapolation grid start");
  pipe_cmd->add_option("--t-hi", pipe_options->t_grid.hi, "extrapolation grid end");
  pipe_cmd->add_option("--t-step", pipe_options->t_grid.step, "extrapolation grid step");
  pipe_cmd->add_flag("--force", pipe_options->overwrite, "replace an existing output directory");
  pipe_cmd->add_flag("--pretokenized", pipe_options->pretokenized,
                     "corpus files are already one token per whitespace run; skip cleaning");
  pipe_cmd->callback([pipe_common, pipe_manifest, pipe_options] {
    if (pipe_common->out_dir.empty())
      throw std::runtime_error("pipeline: --out-dir is required");
    rf::CorpusManifest manifest = rf::load_manifest(*pipe_manifest);
    rf::run_pipeline(manifest, resolve_config(pipe_common->config_path),
                     resolve_lemma_map(pipe_common->lemma_path), pipe_common->out_dir,
                     *pipe_options);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "rankfreq: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
