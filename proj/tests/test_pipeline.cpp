#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rankfreq/entropy.hpp"
#include "rankfreq/pipeline.hpp"
#include "rankfreq/report.hpp"
#include "rankfreq/synth.hpp"

namespace fs = std::filesystem;
using namespace rankfreq;

namespace {

// Fresh scratch directory per test case, removed on destruction.
struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("rankfreq-test-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter()++));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  static int& counter() {
    static int n = 0;
    return n;
  }
  fs::path file(const std::string& name, const std::string& content) const {
    fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }
  std::string slurp(const fs::path& p) const {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
};

const char* kTinyManifest = R"({
  "name": "tiny",
  "entries": [
    {"path": "a.txt", "style": "colloquial"},
    {"path": "b.txt", "style": "scientific"}
  ]
})";

}  // namespace

TEST_CASE("style labels") {
  for (const char* s :
       {"belles-lettres", "colloquial", "scientific", "official", "journalistic", "other"})
    CHECK(is_style_label(s));
  CHECK_FALSE(is_style_label("poetry"));
  CHECK_FALSE(is_style_label(""));
}

TEST_CASE("manifest loading resolves relative paths") {
  Scratch s;
  s.file("corpus.json", kTinyManifest);
  auto m = load_manifest((s.dir / "corpus.json").string());
  CHECK(m.name == "tiny");
  REQUIRE(m.entries.size() == 2);
  CHECK(m.entries[0].path == (s.dir / "a.txt").string());
  CHECK(m.entries[0].style == "colloquial");

  CHECK_THROWS(load_manifest((s.dir / "missing.json").string()));
  s.file("bad.json", "{not json");
  CHECK_THROWS(load_manifest((s.dir / "bad.json").string()));
  s.file("noentries.json", "{\"name\": \"x\"}");
  CHECK_THROWS(load_manifest((s.dir / "noentries.json").string()));
}

TEST_CASE("lemma map loading and application") {
  Scratch s;
  s.file("lemma.tsv", "братів\tбрат\nбрати\tбрат\n# comment\n\n");
  auto map = load_lemma_map((s.dir / "lemma.tsv").string());
  CHECK(map.size() == 2);

  std::vector<Token> tokens = {"братів", "слово", "брати"};
  apply_lemma_map(tokens, map);
  CHECK(tokens == std::vector<Token>{"брат", "слово", "брат"});

  // mapping then counting == counting premapped tokens
  std::vector<Token> premapped = {"брат", "слово", "брат"};
  CHECK(build_table(tokens).entries == build_table(premapped).entries);

  s.file("conflict.tsv", "брати\tбрат\nбрати\tбрати\n");
  CHECK_THROWS_WITH_AS(load_lemma_map((s.dir / "conflict.tsv").string()),
                       doctest::Contains("line 2"), std::runtime_error);
  s.file("badline.tsv", "нема-таба\n");
  CHECK_THROWS(load_lemma_map((s.dir / "badline.tsv").string()));
}

TEST_CASE("clean config loading") {
  Scratch s;
  s.file("cfg.json", R"({
    "lowercase": false,
    "script_filter": "cyrillic",
    "variant_merge_groups": [{"canonical": "і", "variants": ["і", "й"]}]
  })");
  auto cfg = load_clean_config((s.dir / "cfg.json").string());
  CHECK_FALSE(cfg.lowercase);
  CHECK(cfg.script_filter == ScriptFilter::kCyrillic);
  REQUIRE(cfg.variant_merge_groups.size() == 1);
  CHECK(cfg.variant_merge_groups[0].canonical == "і");

  s.file("unknown.json", R"({"lower_case": true})");
  CHECK_THROWS_AS(load_clean_config((s.dir / "unknown.json").string()), ConfigError);
  s.file("badtype.json", R"({"lowercase": "yes"})");
  CHECK_THROWS_AS(load_clean_config((s.dir / "badtype.json").string()), ConfigError);
  s.file("overlap.json",
         R"({"variant_merge_groups": [
              {"canonical": "і", "variants": ["і", "й"]},
              {"canonical": "в", "variants": ["в", "й"]}]})");
  CHECK_THROWS_AS(load_clean_config((s.dir / "overlap.json").string()), ConfigError);
}

TEST_CASE("pipeline writes the full report tree") {
  Scratch s;
  s.file("a.txt", "а б а");
  s.file("b.txt", "це наука це");
  s.file("corpus.json", kTinyManifest);
  auto manifest = load_manifest((s.dir / "corpus.json").string());

  fs::path out = s.dir / "out";
  run_pipeline(manifest, CleanConfig{}, LemmaMap{}, out.string());

  const std::vector<std::string> dirs = {"colloquial", "scientific", "merged"};
  const std::vector<std::string> files = {"freq.tsv",     "loglog.tsv",
                                          "zipf.json",    "windows.tsv",
                                          "kernel.json",  "entropy.json",
                                          "extrapolation.json"};
  for (const auto& d : dirs)
    for (const auto& f : files) CHECK(fs::exists(out / d / f));

  // no staging remnants
  int entries = 0;
  for (auto& p : fs::directory_iterator(s.dir)) {
    (void)p;
    ++entries;
  }
  CHECK(entries == 4);  // a.txt, b.txt, corpus.json, out

  CHECK(s.slurp(out / "colloquial" / "freq.tsv") ==
        "rank\tword\tcount\tfreq\n1\tа\t2\t0.666667\n2\tб\t1\t0.333333\n");

  auto ej = nlohmann::json::parse(s.slurp(out / "colloquial" / "entropy.json"));
  CHECK(ej["N"] == 3000);
  CHECK(ej["S"].get<double>() == doctest::Approx(0.6365141682948128).epsilon(1e-12));
  CHECK(ej["coverage"].get<double>() == doctest::Approx(1.0));

  // analyses that need more ranks degrade to an error report, run still green
  auto zj = nlohmann::json::parse(s.slurp(out / "colloquial" / "zipf.json"));
  CHECK(zj.contains("error"));  // vocabulary of 2 cannot be fitted
  auto kj = nlohmann::json::parse(s.slurp(out / "merged" / "kernel.json"));
  CHECK(kj.contains("error"));  // far fewer ranks than one window
  // four distinct words are enough for the global fit
  auto mz = nlohmann::json::parse(s.slurp(out / "merged" / "zipf.json"));
  CHECK(mz.contains("z"));

  // merged counts both files
  auto merged = nlohmann::json::parse(s.slurp(out / "merged" / "entropy.json"));
  CHECK(merged["coverage"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("pipeline refuses to clobber unless asked") {
  Scratch s;
  s.file("a.txt", "а б а");
  s.file("b.txt", "це наука це");
  s.file("corpus.json", kTinyManifest);
  auto manifest = load_manifest((s.dir / "corpus.json").string());

  fs::path out = s.dir / "out";
  run_pipeline(manifest, CleanConfig{}, LemmaMap{}, out.string());
  CHECK_THROWS_WITH_AS(
      run_pipeline(manifest, CleanConfig{}, LemmaMap{}, out.string()),
      doctest::Contains("exists"), std::runtime_error);

  // overwrite replaces the whole tree
  fs::create_directories(out / "stale");
  PipelineOptions opt;
  opt.overwrite = true;
  run_pipeline(manifest, CleanConfig{}, LemmaMap{}, out.string(), opt);
  CHECK_FALSE(fs::exists(out / "stale"));
  CHECK(fs::exists(out / "merged" / "freq.tsv"));
}

TEST_CASE("failed runs leave nothing behind") {
  Scratch s;
  s.file("a.txt", "а б а");
  s.file("corpus.json", R"({"entries": [
    {"path": "a.txt", "style": "colloquial"},
    {"path": "gone.txt", "style": "scientific"}
  ]})");
  auto manifest = load_manifest((s.dir / "corpus.json").string());
  fs::path out = s.dir / "out";
  CHECK_THROWS(run_pipeline(manifest, CleanConfig{}, LemmaMap{}, out.string()));
  CHECK_FALSE(fs::exists(out));
  int entries = 0;
  for (auto& p : fs::directory_iterator(s.dir)) {
    (void)p;
    ++entries;
  }
  CHECK(entries == 2);  // a.txt and corpus.json only; staging cleaned up
}

TEST_CASE("pipeline input validation") {
  Scratch s;
  s.file("a.txt", "а");
  fs::path out = s.dir / "out";

  CorpusManifest empty;
  CHECK_THROWS_AS(run_pipeline(empty, CleanConfig{}, LemmaMap{}, out.string()),
                  EmptyCorpusError);

  CorpusManifest badstyle;
  badstyle.entries = {{(s.dir / "a.txt").string(), "poetry"}};
  CHECK_THROWS_WITH_AS(run_pipeline(badstyle, CleanConfig{}, LemmaMap{}, out.string()),
                       doctest::Contains("style"), std::runtime_error);

  CorpusManifest dup;
  dup.entries = {{(s.dir / "a.txt").string(), "other"},
                 {(s.dir / "a.txt").string(), "other"}};
  CHECK_THROWS_WITH_AS(run_pipeline(dup, CleanConfig{}, LemmaMap{}, out.string()),
                       doctest::Contains("twice"), std::runtime_error);

  // a style whose files clean down to nothing is an error, and atomicity holds
  CorpusManifest numeric;
  s.file("nums.txt", "123 456");
  numeric.entries = {{(s.dir / "nums.txt").string(), "other"}};
  CHECK_THROWS_AS(run_pipeline(numeric, CleanConfig{}, LemmaMap{}, out.string()),
                  EmptyCorpusError);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("pretokenized pipeline accepts synthetic corpora") {
  Scratch s;
  GeneratorSpec spec;
  spec.vocabulary_size = 2000;
  spec.sample_size = 50000;
  spec.seed = 5;
  auto tokens = generate(spec);
  std::string text;
  for (const auto& t : tokens) {
    text += t;
    text += '\n';
  }
  s.file("synth.txt", text);
  s.file("corpus.json", R"({"entries": [{"path": "synth.txt", "style": "other"}]})");
  auto manifest = load_manifest((s.dir / "corpus.json").string());

  fs::path out = s.dir / "out";
  PipelineOptions opt;
  opt.pretokenized = true;
  run_pipeline(manifest, CleanConfig{}, LemmaMap{}, out.string(), opt);

  auto zj = nlohmann::json::parse(s.slurp(out / "other" / "zipf.json"));
  REQUIRE(zj.contains("z"));
  CHECK(zj["z"].get<double>() == doctest::Approx(1.0).epsilon(0.1));

  // without pretokenized the same corpus is all number-words -> no tokens
  fs::path out2 = s.dir / "out2";
  CHECK_THROWS_AS(run_pipeline(manifest, CleanConfig{}, LemmaMap{}, out2.string()),
                  EmptyCorpusError);
}

TEST_CASE("pipeline output is deterministic") {
  Scratch s;
  s.file("a.txt", "а б а в г ґ д е є а б ж з і ї й а б в");
  s.file("b.txt", "це наука це система це мова наука це");
  s.file("corpus.json", kTinyManifest);
  auto manifest = load_manifest((s.dir / "corpus.json").string());

  run_pipeline(manifest, CleanConfig{}, LemmaMap{}, (s.dir / "o1").string());
  run_pipeline(manifest, CleanConfig{}, LemmaMap{}, (s.dir / "o2").string());

  int compared = 0;
  for (auto& p : fs::recursive_directory_iterator(s.dir / "o1")) {
    if (!p.is_regular_file()) continue;
    fs::path rel = fs::relative(p.path(), s.dir / "o1");
    CHECK(s.slurp(p.path()) == s.slurp(s.dir / "o2" / rel));
    ++compared;
  }
  CHECK(compared == 21);  // 3 dirs x 7 files
}

TEST_CASE("report JSON shapes") {
  ZipfFit fit;
  fit.A = 0.1;
  fit.z = 1.05;
  fit.r_lo = 1;
  fit.r_hi = 300;
  fit.rss = 0.5;
  fit.r2 = 0.99;
  auto j = nlohmann::json::parse(zipf_fit_json(fit));
  CHECK(j["A"].get<double>() == doctest::Approx(0.1));
  CHECK(j["z"].get<double>() == doctest::Approx(1.05));
  CHECK(j["r_lo"] == 1);
  CHECK(j["r_hi"] == 300);

  auto none = nlohmann::json::parse(kernel_json(std::nullopt));
  CHECK(none["found"] == false);

  KernelBoundary b;
  b.r_max = 800;
  b.z_before = 1.0;
  b.z_after = 1.4;
  auto found = nlohmann::json::parse(kernel_json(b));
  CHECK(found["found"] == true);
  CHECK(found["r_max"] == 800);
  CHECK(found["method"] == "window-jump");

  auto err = nlohmann::json::parse(error_json("nope"));
  CHECK(err["error"] == "nope");
}
