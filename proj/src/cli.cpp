// Copyright 2026 The textsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "textsynth/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "textsynth/engine.hpp"
#include "textsynth/error.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace textsynth {
namespace {

// Raw flag values; only flags the user actually passed are applied.
struct GenerationFlags {
  std::string config_path;
  std::string corpus;
  std::vector<std::string> fonts;
  std::string mode;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  int width = 0;
  int height = 0;
  int size_min = 0;
  int size_max = 0;
  std::string size_dist;
  int min_len = 0;
  int max_len = 0;
  double aug_prob = 0.0;
  int aug_max = 0;
  std::vector<std::string> enable;
  std::vector<std::string> disable;
  std::string format;
  std::string output;
  std::string storage;
  std::size_t batch_size = 0;
  double split = 0.0;
  std::string direction;
  std::string alignment;
  std::vector<std::string> ranges;
  std::vector<std::string> backgrounds;
  std::string text_color;
  int workers = 0;
  std::size_t memory_budget = 0;
  bool timestamp = false;
  bool no_antialias = false;
  bool json = false;

  std::map<std::string, CLI::Option*> opts;
};

void add_generation_flags(CLI::App* app, GenerationFlags& f, bool with_output_flags) {
  auto& o = f.opts;
  o["config"] = app->add_option("--config", f.config_path, "JSON configuration file; flags override it");
  o["corpus"] = app->add_option("--corpus", f.corpus, "UTF-8 text corpus");
  o["font"] = app->add_option("--font", f.fonts, "Font file, optionally PATH:PCT (repeatable)");
  o["mode"] = app->add_option("--mode", f.mode, "Segmentation: char, word, ngram, sentence, line");
  o["count"] = app->add_option("--count", f.count, "Number of samples N");
  o["seed"] = app->add_option("--seed", f.seed, "Master seed");
  o["width"] = app->add_option("--width", f.width, "Image width in pixels");
  o["height"] = app->add_option("--height", f.height, "Image height in pixels");
  o["size-min"] = app->add_option("--size-min", f.size_min, "Minimum font size in pixels");
  o["size-max"] = app->add_option("--size-max", f.size_max, "Maximum font size in pixels");
  o["size-dist"] = app->add_option("--size-dist", f.size_dist, "Size distribution: normal or uniform");
  o["min-len"] = app->add_option("--min-len", f.min_len, "Minimum segment length in graphemes");
  o["max-len"] = app->add_option("--max-len", f.max_len, "Maximum segment length in graphemes");
  o["aug-prob"] = app->add_option("--aug-prob", f.aug_prob, "Augmentation probability");
  o["aug-max"] = app->add_option("--aug-max", f.aug_max, "Maximum transforms per sample");
  o["enable"] = app->add_option("--enable", f.enable, "Enable a transform (repeatable)");
  o["disable"] = app->add_option("--disable", f.disable, "Disable a transform (repeatable)");
  o["format"] = app->add_option("--format", f.format, "Label format: crnn, trocr, csv, huggingface");
  o["output"] = app->add_option("--output", f.output, "Output path");
  if (with_output_flags) {
    o["storage"] = app->add_option("--storage", f.storage, "Storage mode: zip, chunked, files");
    o["batch-size"] = app->add_option("--batch-size", f.batch_size, "Images per chunk in chunked mode");
    o["split"] = app->add_option("--split", f.split, "Train fraction");
    o["memory-budget"] = app->add_option("--memory-budget", f.memory_budget,
                                         "Memory budget, e.g. 512MiB")
                             ->transform(CLI::AsSizeValue(false));
    o["timestamp"] = app->add_flag("--timestamp", f.timestamp, "Record a timestamp in the manifest");
  }
  o["direction"] = app->add_option("--direction", f.direction, "Text direction: rtl or ltr");
  o["alignment"] = app->add_option("--alignment", f.alignment, "Alignment: left, center, right");
  o["ranges"] = app->add_option("--ranges", f.ranges, "Allowed code point range HEXLO-HEXHI (repeatable)");
  o["bg"] = app->add_option("--bg", f.backgrounds, "Background COLOR|PRESET|IMAGE[:PCT] (repeatable)");
  o["text-color"] = app->add_option("--text-color", f.text_color, "Text color #RRGGBB");
  o["workers"] = app->add_option("--workers", f.workers, "Worker threads");
  o["no-antialias"] = app->add_flag("--no-antialias", f.no_antialias, "Binary glyph coverage");
  o["json"] = app->add_flag("--json", f.json, "Print a JSON summary on standard output");
}

bool given(const GenerationFlags& f, const std::string& name) {
  auto it = f.opts.find(name);
  return it != f.opts.end() && it->second->count() > 0;
}

GeneratorConfig assemble_config(const GenerationFlags& f) {
  GeneratorConfig c;
  if (given(f, "config")) {
    std::ifstream in(f.config_path, std::ios::binary);
    if (!in) throw ConfigError("--config", "cannot read " + f.config_path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError("--config", std::string("malformed JSON: ") + e.what());
    }
    c = GeneratorConfig::from_json(doc);
  }
  std::vector<FieldIssue> issues;
  auto enum_issue = [&](const char* flag, const std::string& v) {
    issues.push_back({flag, "unrecognized value '" + v + "'"});
  };

  if (given(f, "corpus")) {
    c.corpus_path = f.corpus;
    c.corpus_text.reset();
  }
  if (given(f, "font")) {
    c.fonts.clear();
    for (const std::string& a : f.fonts) c.fonts.push_back(parse_font_argument(a));
  }
  if (given(f, "mode")) {
    if (auto m = parse_segmentation_mode(f.mode)) c.segmentation.mode = *m;
    else enum_issue("--mode", f.mode);
  }
  if (given(f, "count")) c.count = f.count;
  if (given(f, "seed")) c.seed = f.seed;
  if (given(f, "width")) c.width = f.width;
  if (given(f, "height")) c.height = f.height;
  if (given(f, "size-min")) c.size.min_px = f.size_min;
  if (given(f, "size-max")) c.size.max_px = f.size_max;
  if (given(f, "size-dist")) {
    if (f.size_dist == "normal") c.size.distribution = SizeDistribution::kNormal;
    else if (f.size_dist == "uniform") c.size.distribution = SizeDistribution::kUniform;
    else enum_issue("--size-dist", f.size_dist);
  }
  if (given(f, "min-len")) c.segmentation.min_graphemes = f.min_len;
  if (given(f, "max-len")) c.segmentation.max_graphemes = f.max_len;
  if (given(f, "aug-prob")) c.augmentation.p_aug = f.aug_prob;
  if (given(f, "aug-max")) c.augmentation.m_max = f.aug_max;
  for (const std::string& t : f.enable) {
    if (std::find(f.disable.begin(), f.disable.end(), t) != f.disable.end()) {
      issues.push_back({"--enable", "--enable " + t + " conflicts with --disable " + t});
    }
  }
  for (const std::string& t : f.enable) {
    if (auto k = parse_transform_kind(t)) c.augmentation.enable(*k);
    else enum_issue("--enable", t);
  }
  for (const std::string& t : f.disable) {
    if (auto k = parse_transform_kind(t)) c.augmentation.disable(*k);
    else enum_issue("--disable", t);
  }
  if (given(f, "format")) {
    if (auto v = parse_output_format(f.format)) c.format = *v;
    else enum_issue("--format", f.format);
  }
  if (given(f, "output")) c.output = f.output;
  if (given(f, "storage")) {
    if (auto v = parse_storage_mode(f.storage)) c.storage = *v;
    else enum_issue("--storage", f.storage);
  }
  if (given(f, "batch-size")) c.batch_size = f.batch_size;
  if (given(f, "split")) c.split = f.split;
  if (given(f, "memory-budget")) c.memory_budget = f.memory_budget;
  if (given(f, "timestamp")) c.timestamp = f.timestamp;
  if (given(f, "direction")) {
    if (auto v = parse_direction(f.direction)) c.direction = *v;
    else enum_issue("--direction", f.direction);
  }
  if (given(f, "alignment")) {
    if (auto v = parse_alignment(f.alignment)) c.alignment = *v;
    else enum_issue("--alignment", f.alignment);
  }
  if (given(f, "ranges")) {
    c.script.allowed.clear();
    for (const std::string& r : f.ranges) {
      try {
        c.script.allowed.push_back(parse_code_point_range(r));
      } catch (const Error&) {
        issues.push_back({"--ranges", "bad range '" + r + "', expected HEXLO-HEXHI"});
      }
    }
    // Keep only the preserved marks the new ranges still admit.
    std::vector<CodePointRange> kept;
    for (const CodePointRange& d : c.script.preserved_diacritics) {
      ScriptPolicy probe;
      probe.allowed = c.script.allowed;
      if (probe.allows(d.lo) && probe.allows(d.hi)) kept.push_back(d);
    }
    c.script.preserved_diacritics = kept;
  }
  if (given(f, "bg")) {
    std::vector<BackgroundSpec> opts;
    for (const std::string& b : f.backgrounds) opts.push_back(parse_background_argument(b));
    c.background = combine_backgrounds(std::move(opts));
  }
  if (given(f, "text-color")) {
    if (auto v = parse_hex_color(f.text_color)) c.text_color = *v;
    else enum_issue("--text-color", f.text_color);
  }
  if (given(f, "workers")) c.workers = f.workers;
  if (given(f, "no-antialias")) c.antialias = !f.no_antialias;
  if (!issues.empty()) throw ConfigError(std::move(issues));
  c.validate();
  return c;
}

void print_issues(const ConfigError& e, std::ostream& err) {
  for (const FieldIssue& i : e.issues()) {
    err << "error: " << (i.path.empty() ? "" : i.path + ": ") << i.message << "\n";
  }
}

std::string format_rate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

int cmd_generate(const GenerationFlags& f, std::ostream& out, std::ostream& err) {
  GeneratorConfig c = assemble_config(f);
  if (c.output.empty()) throw ConfigError("--output", "an output path is required");
  Generator gen(c);
  for (const std::string& w : gen.warnings()) err << "warning: " << w << "\n";
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t last = 0;
  DatasetManifest m = gen.generate([&](const ProgressEvent& ev) {
    if (ev.produced - last >= 1000 || (ev.produced == ev.total && last != ev.total)) {
      last = ev.produced;
      err << "generated " << ev.produced << "/" << ev.total << " ("
          << format_rate(ev.rate) << " samples/s)\n";
    }
  });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << "wrote " << m.total << " samples (" << m.train << " train, " << m.val
      << " val) to " << c.output << "\n";
  if (f.json) {
    ordered_json j;
    j["output"] = c.output;
    j["total"] = m.total;
    j["train"] = m.train;
    j["val"] = m.val;
    j["clean"] = m.clean;
    j["augmented"] = m.augmented;
    j["segment_skips"] = m.statistic("segment_skips");
    j["missing_glyphs"] = m.statistic("missing_glyphs");
    j["seed"] = m.master_seed;
    j["seconds"] = secs;
    j["warnings"] = gen.warnings();
    out << j.dump() << "\n";
  }
  return kExitOk;
}

int cmd_preview(const GenerationFlags& f, std::size_t samples, std::ostream& out,
                std::ostream& err) {
  GeneratorConfig c = assemble_config(f);
  if (c.output.empty()) throw ConfigError("--output", "an output directory is required");
  Generator gen(c);
  for (const std::string& w : gen.warnings()) err << "warning: " << w << "\n";
  const std::vector<SampleRecord> records = gen.preview(samples);
  const fs::path dir = c.output;
  fs::create_directories(dir);
  std::string labels = label_file_preamble(c.format);
  ordered_json list = ordered_json::array();
  for (const SampleRecord& r : records) {
    const std::string name = filename_for(static_cast<std::int64_t>(r.index));
    write_file(dir / name, r.image_png);
    labels += encode_label_line(c.format, name, r.label);
    list.push_back({{"image", name}, {"label", r.label}, {"font", r.font_used},
                    {"size", r.size_used}, {"recipe", r.recipe_summary}});
  }
  const std::string label_name = std::string("labels_preview.") + label_extension(c.format);
  std::ofstream(dir / label_name, std::ios::binary) << labels;
  err << "wrote " << records.size() << " preview samples to " << dir.string() << "\n";
  if (f.json) out << list.dump() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  const VerifyReport r = verify(path);
  for (const VerifyFailure& fl : r.failures) {
    err << "FAIL [" << fl.kind << "] " << fl.path << ": " << fl.message << "\n";
  }
  err << (r.ok() ? "OK" : "FAILED") << ": " << r.images << " images, " << r.labels
      << " labels, " << r.failures.size() << " failures\n";
  if (as_json) {
    ordered_json j;
    j["ok"] = r.ok();
    j["images"] = r.images;
    j["labels"] = r.labels;
    ordered_json fails = ordered_json::array();
    for (const VerifyFailure& fl : r.failures) {
      fails.push_back({{"path", fl.path}, {"kind", fl.kind}, {"message", fl.message}});
    }
    j["failures"] = std::move(fails);
    out << j.dump() << "\n";
  }
  return r.ok() ? kExitOk : kExitRuntime;
}

int cmd_bench(const GenerationFlags& f, const std::vector<std::uint64_t>& sizes,
              std::ostream& out, std::ostream& err) {
  GeneratorConfig base = assemble_config(f);
  const fs::path scratch = fs::temp_directory_path() /
                           ("textsynth-bench-" + std::to_string(::getpid()));
  ordered_json rows = ordered_json::array();
  err << "| Samples | Seconds | Samples/s |\n|--------:|--------:|----------:|\n";
  for (std::uint64_t n : sizes) {
    GeneratorConfig c = base;
    c.count = n;
    c.output = (scratch / ("run-" + std::to_string(n) + (c.storage == StorageMode::kZip ? ".zip" : ""))).string();
    fs::remove_all(c.output);
    const auto t0 = std::chrono::steady_clock::now();
    Generator(c).generate();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    fs::remove_all(c.output);
    err << "| " << n << " | " << format_rate(secs) << " | " << format_rate(n / secs) << " |\n";
    rows.push_back({{"samples", n}, {"seconds", secs}, {"samples_per_second", n / secs}});
  }
  fs::remove_all(scratch);
  if (f.json) out << rows.dump() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthetic OCR dataset generator", "textsynth"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  GenerationFlags gen_flags;
  CLI::App* gen = app.add_subcommand("generate", "Generate a dataset");
  add_generation_flags(gen, gen_flags, true);

  GenerationFlags prev_flags;
  std::size_t samples = 8;
  CLI::App* prev = app.add_subcommand("preview", "Render the first samples of a dataset");
  add_generation_flags(prev, prev_flags, false);
  prev->add_option("--samples", samples, "Number of preview samples (<= 64)");

  std::string verify_path;
  bool verify_json = false;
  CLI::App* ver = app.add_subcommand("verify", "Check a generated dataset");
  ver->add_option("dataset", verify_path, "Archive, chunk directory or files directory")->required();
  ver->add_flag("--json", verify_json, "Print a JSON report on standard output");

  GenerationFlags bench_flags;
  std::vector<std::uint64_t> sizes{1000, 10000, 50000};
  CLI::App* bench = app.add_subcommand("bench", "Measure generation throughput");
  add_generation_flags(bench, bench_flags, true);
  bench->add_option("--sizes", sizes, "Dataset sizes to time")->delimiter(',');

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();  // program name
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(gen_flags, out, err);
    if (prev->parsed()) return cmd_preview(prev_flags, samples, out, err);
    if (ver->parsed()) return cmd_verify(verify_path, verify_json, out, err);
    if (bench->parsed()) return cmd_bench(bench_flags, sizes, out, err);
  } catch (const ConfigError& e) {
    print_issues(e, err);
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << " [" << to_string(e.code()) << "]\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace textsynth
