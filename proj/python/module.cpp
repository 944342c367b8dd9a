#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rankfreq/entropy.hpp"
#include "rankfreq/extrapolate.hpp"
#include "rankfreq/freqtable.hpp"
#include "rankfreq/pipeline.hpp"
#include "rankfreq/synth.hpp"
#include "rankfreq/tokenizer.hpp"
#include "rankfreq/translit.hpp"
#include "rankfreq/unicode.hpp"
#include "rankfreq/zipf.hpp"

namespace py = pybind11;
using namespace rankfreq;

namespace {

CleanConfig make_config(bool lowercase, bool keep_internal_hyphen, bool keep_apostrophe,
                        const std::string& script_filter,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>&
                            variant_merge_groups) {
  CleanConfig config;
  config.lowercase = lowercase;
  config.keep_internal_hyphen = keep_internal_hyphen;
  config.keep_apostrophe = keep_apostrophe;
  config.script_filter = script_filter_from_name(script_filter);
  for (const auto& [canonical, variants] : variant_merge_groups)
    config.variant_merge_groups.push_back({canonical, variants});
  config.validate();
  return config;
}

LawKind law_from_name(const std::string& name) {
  if (name == "zipf") return LawKind::kZipf;
  if (name == "piecewise") return LawKind::kPiecewiseZipf;
  if (name == "extrapolation") return LawKind::kExtrapolation;
  throw std::invalid_argument("unknown law \"" + name + "\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "rank-frequency corpus statistics";

  py::register_exception<Utf8Error>(m, "Utf8Error", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<EmptyCorpusError>(m, "EmptyCorpusError", PyExc_ValueError);
  py::register_exception<InsufficientDataError>(m, "InsufficientDataError", PyExc_ValueError);
  py::register_exception<NoValidModelError>(m, "NoValidModelError", PyExc_ValueError);
  py::register_exception<TranslitError>(m, "TranslitError", PyExc_ValueError);

  py::class_<CleanReport>(m, "CleanReport")
      .def_readonly("tokens_kept", &CleanReport::tokens_kept)
      .def_readonly("removed_numbers", &CleanReport::removed_numbers)
      .def_readonly("removed_number_words", &CleanReport::removed_number_words)
      .def_readonly("removed_foreign_script", &CleanReport::removed_foreign_script)
      .def_readonly("removed_punctuation_only", &CleanReport::removed_punctuation_only)
      .def_readonly("dashes_removed", &CleanReport::dashes_removed)
      .def("candidates_examined", &CleanReport::candidates_examined);

  m.def(
      "tokenize",
      [](const std::string& text, bool lowercase, bool keep_internal_hyphen,
         bool keep_apostrophe, const std::string& script_filter,
         const std::vector<std::pair<std::string, std::vector<std::string>>>& groups) {
        CleanConfig config = make_config(lowercase, keep_internal_hyphen, keep_apostrophe,
                                         script_filter, groups);
        TokenizeResult result = tokenize(text, config);
        result.tokens = apply_variant_merge(std::move(result.tokens), config);
        return py::make_tuple(result.tokens, result.report);
      },
      py::arg("text"), py::arg("lowercase") = true, py::arg("keep_internal_hyphen") = true,
      py::arg("keep_apostrophe") = true, py::arg("script_filter") = "ukrainian-cyrillic",
      py::arg("variant_merge_groups") =
          std::vector<std::pair<std::string, std::vector<std::string>>>{},
      "Clean text into (tokens, report).");

  m.def("split_pretokenized", [](const std::string& text) { return split_pretokenized(text); },
        py::arg("text"));

  py::class_<RankEntry>(m, "RankEntry")
      .def_readonly("rank", &RankEntry::rank)
      .def_readonly("word", &RankEntry::word)
      .def_readonly("count", &RankEntry::count)
      .def_readonly("freq", &RankEntry::freq)
      .def("__repr__", [](const RankEntry& e) {
        return "RankEntry(rank=" + std::to_string(e.rank) + ", word='" + e.word +
               "', count=" + std::to_string(e.count) + ")";
      });

  py::class_<FrequencyTable>(m, "FrequencyTable")
      .def_readonly("entries", &FrequencyTable::entries)
      .def_readonly("corpus_size", &FrequencyTable::corpus_size)
      .def("vocabulary_size", &FrequencyTable::vocabulary_size)
      .def("to_tsv",
           [](const FrequencyTable& t) {
             std::ostringstream out;
             write_tsv(t, out);
             return out.str();
           })
      .def_static("from_tsv", [](const std::string& text) {
        std::istringstream in(text);
        return read_tsv(in);
      });

  m.def("build_table", [](const std::vector<Token>& tokens) { return build_table(tokens); },
        py::arg("tokens"));
  m.def("merge_tables", [](const std::vector<FrequencyTable>& tables) {
    return merge_tables(tables);
  });
  m.def("top_k", &top_k, py::arg("table"), py::arg("k"));
  m.def("plateau_cap", &plateau_cap, py::arg("table"), py::arg("min_count") = 5);

  py::class_<ZipfFit>(m, "ZipfFit")
      .def_readonly("A", &ZipfFit::A)
      .def_readonly("z", &ZipfFit::z)
      .def_readonly("r_lo", &ZipfFit::r_lo)
      .def_readonly("r_hi", &ZipfFit::r_hi)
      .def_readonly("rss", &ZipfFit::rss)
      .def_readonly("r2", &ZipfFit::r2)
      .def_readonly("n_used", &ZipfFit::n_used)
      .def_readonly("min_count", &ZipfFit::min_count)
      .def("__repr__", [](const ZipfFit& f) {
        return "ZipfFit(z=" + std::to_string(f.z) + ", A=" + std::to_string(f.A) + ", [" +
               std::to_string(f.r_lo) + ", " + std::to_string(f.r_hi) + "])";
      });

  py::class_<WindowSeries>(m, "WindowSeries")
      .def_readonly("window_width", &WindowSeries::window_width)
      .def_readonly("step", &WindowSeries::step)
      .def_readonly("fits", &WindowSeries::fits)
      .def_static("center", &WindowSeries::center);

  py::enum_<BoundaryMethod>(m, "BoundaryMethod")
      .value("WINDOW_JUMP", BoundaryMethod::kWindowJump)
      .value("TWO_SEGMENT", BoundaryMethod::kTwoSegment);

  py::class_<KernelBoundary>(m, "KernelBoundary")
      .def_readonly("r_max", &KernelBoundary::r_max)
      .def_readonly("z_before", &KernelBoundary::z_before)
      .def_readonly("z_after", &KernelBoundary::z_after)
      .def_readonly("method", &KernelBoundary::method)
      .def_readonly("degenerate", &KernelBoundary::degenerate);

  m.def("fit_zipf", &fit_zipf, py::arg("table"), py::arg("r_lo"), py::arg("r_hi"));
  m.def("window_scan", &window_scan, py::arg("table"), py::arg("width") = 200,
        py::arg("step") = 100);
  m.def(
      "detect_kernel_boundary",
      [](const WindowSeries& series, double delta, std::uint64_t min_window_count,
         int persistence) {
        DetectOptions options;
        options.delta = delta;
        options.min_window_count = min_window_count;
        options.persistence = persistence;
        return detect_kernel_boundary(series, options);
      },
      py::arg("series"), py::arg("delta") = 0.2, py::arg("min_window_count") = 30,
      py::arg("persistence") = 2);

  py::class_<TwoSegmentFit>(m, "TwoSegmentFit")
      .def_readonly("boundary", &TwoSegmentFit::boundary)
      .def_readonly("left", &TwoSegmentFit::left)
      .def_readonly("right", &TwoSegmentFit::right)
      .def_readonly("total_rss", &TwoSegmentFit::total_rss);

  m.def("fit_two_segment", &fit_two_segment, py::arg("table"), py::arg("r_lo"),
        py::arg("r_hi"), py::arg("step") = 100);

  py::class_<EntropyResult>(m, "EntropyResult")
      .def_readonly("N", &EntropyResult::N)
      .def_readonly("S", &EntropyResult::S)
      .def_readonly("coverage", &EntropyResult::coverage);

  m.def("entropy", &entropy, py::arg("table"), py::arg("n") = 3000);

  py::class_<ExtrapolationModel>(m, "ExtrapolationModel")
      .def_readonly("A", &ExtrapolationModel::A)
      .def_readonly("B", &ExtrapolationModel::B)
      .def_readonly("t", &ExtrapolationModel::t)
      .def_readonly("R", &ExtrapolationModel::R)
      .def_readonly("rss", &ExtrapolationModel::rss)
      .def_readonly("r_lo", &ExtrapolationModel::r_lo)
      .def_readonly("r_hi", &ExtrapolationModel::r_hi);

  m.def(
      "fit_extrapolation",
      [](const FrequencyTable& table, std::uint64_t r_lo, std::uint64_t r_hi, double t_lo,
         double t_hi, double t_step) {
        return fit_extrapolation(table, r_lo, r_hi, TGrid{t_lo, t_hi, t_step});
      },
      py::arg("table"), py::arg("r_lo"), py::arg("r_hi"), py::arg("t_lo") = 0.01,
      py::arg("t_hi") = 0.5, py::arg("t_step") = 0.005);
  m.def("model_frequency", &model_frequency, py::arg("model"), py::arg("r"));
  m.def("predict_zero_rank", &predict_zero_rank, py::arg("model"));

  m.def("to_latin", [](const std::string& text) { return to_latin(text); }, py::arg("text"));
  m.def("from_latin", [](const std::string& text) { return from_latin(text); },
        py::arg("text"));

  m.def(
      "generate",
      [](const std::string& law, double z, double z1, double z2, std::uint64_t break_rank,
         double A, double B, double t, std::uint64_t vocabulary_size,
         std::uint64_t sample_size, std::uint64_t seed) {
        GeneratorSpec spec;
        spec.law = law_from_name(law);
        spec.z = z;
        spec.z1 = z1;
        spec.z2 = z2;
        spec.break_rank = break_rank;
        spec.A = A;
        spec.B = B;
        spec.t = t;
        spec.vocabulary_size = vocabulary_size;
        spec.sample_size = sample_size;
        spec.seed = seed;
        return generate(spec);
      },
      py::arg("law") = "zipf", py::arg("z") = 1.0, py::arg("z1") = 1.0, py::arg("z2") = 1.6,
      py::arg("break_rank") = 800, py::arg("A") = 0.04, py::arg("B") = 0.01,
      py::arg("t") = 0.1, py::arg("vocabulary_size") = 1000, py::arg("sample_size") = 100000,
      py::arg("seed") = 0);

  m.def(
      "run_pipeline",
      [](const std::string& manifest_path, const std::string& out_dir,
         const std::string& config_path, const std::string& lemma_map_path,
         std::uint64_t window_width, std::uint64_t window_step, std::uint64_t entropy_n,
         double delta, bool pretokenized, bool overwrite) {
        PipelineOptions options;
        options.window_width = window_width;
        options.window_step = window_step;
        options.entropy_n = entropy_n;
        options.detect.delta = delta;
        options.pretokenized = pretokenized;
        options.overwrite = overwrite;
        CleanConfig config =
            config_path.empty() ? CleanConfig{} : load_clean_config(config_path);
        LemmaMap lemma = lemma_map_path.empty() ? LemmaMap{} : load_lemma_map(lemma_map_path);
        run_pipeline(load_manifest(manifest_path), config, lemma, out_dir, options);
      },
      py::arg("manifest_path"), py::arg("out_dir"), py::arg("config_path") = "",
      py::arg("lemma_map_path") = "", py::arg("window_width") = 200,
      py::arg("window_step") = 100, py::arg("entropy_n") = 3000, py::arg("delta") = 0.2,
      py::arg("pretokenized") = false, py::arg("overwrite") = false);
}
