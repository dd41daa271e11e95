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


// Prints one PASS/FAIL line per acceptance criterion. Exit status is the
// number of failed criteria (capped at 125).

#include <fcntl.h>
#include <spawn.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>
#include <unicode/uchar.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "textsynth/augment.hpp"
#include "textsynth/cli.hpp"
#include "textsynth/engine.hpp"
#include "textsynth/hash.hpp"
#include "textsynth/image_io.hpp"
#include "textsynth/packaging.hpp"
#include "textsynth/prng.hpp"
#include "textsynth/renderer.hpp"
#include "textsynth/textprep.hpp"

namespace fs = std::filesystem;
using namespace textsynth;

extern char** environ;

namespace {

/// Collects failed checks for one criterion.
struct Checks {
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

fs::path g_scratch;
std::string g_cli;

fs::path scratch(const std::string& name) {
  const fs::path p = g_scratch / name;
  fs::remove_all(p);
  return p;
}

GeneratorConfig base_config(std::uint64_t count) {
  GeneratorConfig c;
  c.corpus_path = oracle::corpus_path();
  c.fonts = {{oracle::font_path("DejaVuSans.ttf"), {}}};
  c.count = count;
  c.seed = 42;
  return c;
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------

void determinism(Checks& c) {
  std::vector<std::map<std::string, std::string>> runs;
  int run = 0;
  for (int workers : {1, 1, 4, 4}) {
    GeneratorConfig cfg = base_config(5000);
    cfg.segmentation.mode = SegmentationMode::kWord;
    cfg.storage = StorageMode::kFiles;
    cfg.workers = workers;
    cfg.output = scratch("det" + std::to_string(run++)).string();
    generate(cfg);
    std::map<std::string, std::string> hashes;
    for (const auto& e : fs::recursive_directory_iterator(cfg.output)) {
      if (!e.is_regular_file()) continue;
      hashes[fs::relative(e.path(), cfg.output).string()] = sha256_hex(read_file(e.path()));
    }
    runs.push_back(std::move(hashes));
    fs::remove_all(cfg.output);
  }
  c.expect(runs[0].size() == 5000 + 3, "expected 5003 files, got " + std::to_string(runs[0].size()));
  for (std::size_t i = 1; i < runs.size(); ++i) {
    c.expect(runs[i] == runs[0], "run " + std::to_string(i) + " differs from run 0");
  }
  c.detail = std::to_string(runs[0].size()) + " files x 4 runs (workers 1,1,4,4)";
}

void font_distribution(Checks& c) {
  GeneratorConfig cfg = base_config(20000);
  cfg.fonts = {{oracle::font_path("DejaVuSans.ttf"), 40.0},
               {oracle::font_path("DejaVuSans-Bold.ttf"), 35.0},
               {oracle::font_path("DejaVuSerif.ttf"), 25.0}};
  cfg.output = scratch("fonts.zip").string();
  const Generator gen(cfg);
  const DatasetManifest m = gen.generate();
  const double expected[] = {40.0, 35.0, 25.0};
  std::ostringstream os;
  for (std::size_t i = 0; i < 3; ++i) {
    std::uint64_t n = 0;
    for (const auto& [name, count] : m.font_counts) {
      if (name == gen.font_names()[i]) n = count;
    }
    const double share = 100.0 * static_cast<double>(n) / static_cast<double>(m.total);
    os << (i ? " " : "") << fmt(share, 2);
    c.expect(std::abs(share - expected[i]) <= 1.5,
             gen.font_names()[i] + " share " + fmt(share, 2));
  }
  c.detail = "shares " + os.str() + " vs 40/35/25";
  fs::remove(cfg.output);
}

void clean_fraction(Checks& c) {
  GeneratorConfig cfg = base_config(10000);
  cfg.augmentation.p_aug = 0.7;
  cfg.output = scratch("clean.zip").string();
  const DatasetManifest m = generate(cfg);
  const double pct = 100.0 * static_cast<double>(m.clean) / static_cast<double>(m.total);
  c.expect(std::abs(pct - 30.0) <= 1.5, "clean fraction " + fmt(pct, 2));
  c.detail = "clean " + fmt(pct, 2) + "% of " + std::to_string(m.total);
  fs::remove(cfg.output);
}

void transforms_per_sample(Checks& c) {
  AugmentationConfig cfg;
  std::uint64_t augmented = 0, steps = 0;
  std::map<TransformKind, std::uint64_t> per_kind;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    Lcg rng = substream_for_sample(42, i);
    const AugmentationRecipe r = plan_recipe(cfg, rng);
    if (!r.applied) continue;
    ++augmented;
    steps += r.steps.size();
    for (const TransformStep& s : r.steps) ++per_kind[s.kind];
  }
  const double mean = static_cast<double>(steps) / static_cast<double>(augmented);
  c.expect(std::abs(mean - 2.5) <= 0.05, "mean " + fmt(mean));
  double lo = 100.0, hi = 0.0;
  for (TransformKind k : kAllTransforms) {
    const double rate = 100.0 * static_cast<double>(per_kind[k]) / static_cast<double>(augmented);
    lo = std::min(lo, rate);
    hi = std::max(hi, rate);
    c.expect(std::abs(rate - 25.0) <= 1.0, std::string(to_string(k)) + " rate " + fmt(rate, 2));
  }
  c.detail = "mean " + fmt(mean) + ", per-transform rates " + fmt(lo, 2) + ".." + fmt(hi, 2) +
             "% over " + std::to_string(augmented) + " augmented recipes";
}

void prng_conformance(Checks& c) {
  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    const auto expect = oracle::lcg_states(seed, 10000);
    Lcg rng(seed);
    std::size_t mismatches = 0;
    for (std::uint32_t s : expect) mismatches += rng.next_state() == s ? 0 : 1;
    c.expect(mismatches == 0, "seed " + std::to_string(seed) + ": " +
                                  std::to_string(mismatches) + " state mismatches");
  }
  Lcg u(42);
  double sum = 0.0;
  for (int i = 0; i < 1000000; ++i) sum += u.next();
  const double mean = sum / 1e6;
  c.expect(std::abs(mean - 0.5) <= 0.003, "uniform mean " + fmt(mean, 5));
  Lcg g(42);
  double gs = 0.0, gq = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double z = g.gaussian();
    gs += z;
    gq += z * z;
  }
  const double gm = gs / 1e5;
  const double sd = std::sqrt(gq / 1e5 - gm * gm);
  c.expect(std::abs(gm) < 0.02, "gaussian mean " + fmt(gm, 4));
  c.expect(std::abs(sd - 1.0) < 0.02, "gaussian std " + fmt(sd, 4));
  c.detail = "3x1e4 states exact, uniform mean " + fmt(mean, 5) + ", gaussian mean " +
             fmt(gm, 4) + " std " + fmt(sd, 4);
}

RasterImage gradient(int w, int h) {
  RasterImage img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      img.set(x, y, {static_cast<std::uint8_t>((x * 37 + y * 11) % 256),
                     static_cast<std::uint8_t>((x * 5 + y * 53) % 256),
                     static_cast<std::uint8_t>((x * y) % 256)});
    }
  }
  return img;
}

bool within(const RasterImage& a, const RasterImage& b, int tol) {
  if (a.width() != b.width() || a.height() != b.height()) return false;
  for (std::size_t i = 0; i < a.pixels().size(); ++i) {
    if (std::abs(int(a.pixels()[i]) - int(b.pixels()[i])) > tol) return false;
  }
  return true;
}

void transform_oracles(Checks& c) {
  const Rgb fill{255, 255, 255};
  const RasterImage g = gradient(17, 17);

  // rotation
  c.expect(rotate(g, 0.0, fill) == g, "rotation 0 not identity");
  const RasterImage flat(30, 20, {90, 91, 92});
  c.expect(rotate(flat, 7.5, {90, 91, 92}) == flat, "rotation of constant image changed");
  const RasterImage r90 = rotate(g, 90.0, fill);
  bool perm = true;
  for (int y = 0; y < 17; ++y) {
    for (int x = 0; x < 17; ++x) perm = perm && r90.at(x, y) == g.at(y, 16 - x);
  }
  c.expect(perm, "rotation 90 permutation");

  // skew
  const RasterImage g9 = gradient(40, 9);
  c.expect(skew(g9, 0.0, 0.0, fill) == g9, "skew 0 not identity");
  c.expect(skew(flat, 0.3, -0.2, {90, 91, 92}) == flat, "skew of constant image changed");
  const RasterImage sk = skew(g9, 0.2, 0.0, fill);
  bool centre = true;
  for (int x = 0; x < 40; ++x) centre = centre && sk.at(x, 4) == g9.at(x, 4);
  c.expect(centre, "skew moved the centre row");
  const RasterImage sk5 = skew(g9, 0.5, 0.0, fill);
  bool linear = true;
  for (int x = 3; x < 37; ++x) {
    linear = linear && sk5.at(x, 8) == g9.at(x - 2, 8) && sk5.at(x, 6) == g9.at(x - 1, 6) &&
             sk5.at(x, 0) == g9.at(x + 2, 0);
  }
  c.expect(linear, "skew displacement not linear in distance from centre");

  // gaussian blur
  for (double sigma : {0.5, 1.0, 2.0}) {
    const auto k = gaussian_kernel(sigma);
    const double sum = std::accumulate(k.begin(), k.end(), 0.0);
    c.expect(std::abs(sum - 1.0) <= 1e-6, "gaussian kernel sum " + fmt(sum, 9));
  }
  c.expect(within(gaussian_blur(flat, 1.7), flat, 1), "gaussian blur of constant image");
  RasterImage dot(21, 21, {0, 0, 0});
  dot.set(10, 10, {255, 255, 255});
  const double w0 = oracle::gaussian_center_weight(1.0);
  c.expect(int(gaussian_blur(dot, 1.0).at(10, 10).r) == int(std::lround(255.0 * w0 * w0)),
           "gaussian blur centre value");

  // motion blur
  const RasterImage g30 = gradient(30, 12);
  c.expect(motion_blur(g30, 1, 0.7) == g30, "motion blur k=1 not identity");
  c.expect(within(motion_blur(flat, 7, 1.1), flat, 1), "motion blur of constant image");
  RasterImage box(30, 12);
  for (int y = 0; y < 12; ++y) {
    for (int x = 0; x < 30; ++x) {
      int acc[3] = {0, 0, 0};
      for (int d = -2; d <= 2; ++d) {
        const Rgb p = g30.at(std::clamp(x + d, 0, 29), y);
        acc[0] += p.r;
        acc[1] += p.g;
        acc[2] += p.b;
      }
      box.set(x, y, {static_cast<std::uint8_t>(std::lround(acc[0] / 5.0)),
                     static_cast<std::uint8_t>(std::lround(acc[1] / 5.0)),
                     static_cast<std::uint8_t>(std::lround(acc[2] / 5.0))});
    }
  }
  c.expect(motion_blur(g30, 5, 0.0) == box, "motion blur angle 0 k=5 vs box blur");

  // gaussian noise
  Lcg n0(1);
  c.expect(gaussian_noise(g, 0.0, n0) == g, "noise sigma 0 not identity");
  const RasterImage gray(256, 64, {128, 128, 128});
  Lcg n1(12345);
  const RasterImage noisy = gaussian_noise(gray, 25.0, n1);
  double s = 0.0, q = 0.0;
  for (std::uint8_t v : noisy.pixels()) {
    s += v;
    q += double(v) * v;
  }
  const double cnt = static_cast<double>(noisy.pixels().size());
  const double mean = s / cnt;
  const double sd = std::sqrt(q / cnt - mean * mean);
  c.expect(std::abs(mean - 128.0) <= 0.5, "noise mean " + fmt(mean));
  c.expect(std::abs(sd - 25.0) <= 1.0, "noise std " + fmt(sd));
  Lcg n2(3);
  const RasterImage black(64, 16, {0, 0, 0});
  const RasterImage nb = gaussian_noise(black, 25.0, n2);
  c.expect(nb.width() == 64 && nb.height() == 16, "noise changed dimensions");

  // salt and pepper
  Lcg sp(8);
  c.expect(salt_pepper(gray, 0.0, sp) == gray, "salt-pepper p=0 not identity");
  const RasterImage all = salt_pepper(gray, 1.0, sp);
  bool binary = true;
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 256; ++x) {
      const Rgb p = all.at(x, y);
      binary = binary && (p == Rgb{0, 0, 0} || p == Rgb{255, 255, 255});
    }
  }
  c.expect(binary, "salt-pepper p=1 left a non-binary pixel");
  const RasterImage some = salt_pepper(gray, 0.05, sp);
  int changed = 0;
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 256; ++x) changed += some.at(x, y) == gray.at(x, y) ? 0 : 1;
  }
  c.expect(std::abs(changed - 819) <= 90, "salt-pepper count " + std::to_string(changed));

  // jpeg
  const auto face = FontFace::load(oracle::font_path("DejaVuSans.ttf"));
  auto plan = make_plan("\xD8\xB3\xD9\x84\xD8\xA7\xD9\x85 abc", face, 34, 256,
                        TextDirection::kRtl, Alignment::kLeft, 10, 10);
  c.expect(plan.has_value(), "text plan did not fit");
  if (plan) {
    const RasterImage text = render(*plan, RasterImage(256, 64));
    const auto q100 = jpeg_degrade(text, 100);
    c.expect(q100.has_value(), "jpeg codec failed");
    if (q100) {
      double se = 0.0;
      for (std::size_t i = 0; i < text.pixels().size(); ++i) {
        const double d = double(text.pixels()[i]) - double(q100->pixels()[i]);
        se += d * d;
      }
      const double mse = se / static_cast<double>(text.pixels().size());
      const double psnr = mse == 0.0 ? 1e9 : 10.0 * std::log10(255.0 * 255.0 / mse);
      c.expect(psnr > 35.0, "jpeg q100 psnr " + fmt(psnr, 1));
    }
    c.expect(encode_jpeg(text, 30).size() < encode_jpeg(text, 90).size(), "jpeg size ordering");
    for (int ql : {1, 30, 70, 100}) {
      const auto out = jpeg_degrade(text, ql);
      c.expect(out && out->width() == 256 && out->height() == 64, "jpeg dimensions");
    }
  }

  // resolution
  const RasterImage g40 = gradient(40, 20);
  c.expect(resolution_degrade(g40, 1.0) == g40, "resolution r=1 not identity");
  const RasterImage flat40(40, 20, {33, 66, 99});
  c.expect(within(resolution_degrade(flat40, 0.37), flat40, 1), "resolution of constant image");
  RasterImage line(40, 20, {0, 0, 0});
  for (int y = 0; y < 20; ++y) line.set(20, y, {255, 255, 255});
  const RasterImage spread = resolution_degrade(line, 0.5);
  int partial = 0;
  for (int x = 0; x < 40; ++x) {
    const int v = spread.at(x, 10).r;
    partial += (v > 0 && v < 255) ? 1 : 0;
  }
  c.expect(partial >= 2, "resolution line spread " + std::to_string(partial));

  // brightness and contrast
  c.expect(brightness(g, 0.0) == g, "brightness 0 not identity");
  c.expect(brightness(RasterImage(1, 1, {100, 100, 100}), 0.15).at(0, 0) == Rgb{115, 115, 115},
           "brightness 100 +0.15");
  c.expect(brightness(RasterImage(1, 1, {255, 255, 255}), 0.15).at(0, 0) == Rgb{255, 255, 255},
           "brightness clip");
  RasterImage ramp(256, 1);
  for (int v = 0; v < 256; ++v) {
    const auto b = static_cast<std::uint8_t>(v);
    ramp.set(v, 0, {b, b, b});
  }
  c.expect(contrast(ramp, 1.0) == ramp, "contrast 1 not identity");
  for (double gamma : {0.3, 0.7, 1.3, 2.0, 5.0}) {
    const RasterImage out = contrast(ramp, gamma);
    c.expect(out.at(0, 0).r == 0 && out.at(255, 0).r == 255, "contrast endpoints");
  }
  const int g128 = contrast(ramp, 2.0).at(128, 0).r;
  c.expect(g128 == 64, "gamma(128, 2) = " + std::to_string(g128));

  // composition
  c.expect(apply(g, {}, fill) == g, "empty recipe not identity");
  const AugmentationRecipe id{true, {{TransformKind::kBrightness, {0.0, 0.0}, 0},
                                     {TransformKind::kContrast, {1.0, 0.0}, 0}}};
  c.expect(apply(g, id, fill) == g, "identity recipe changed the image");
  c.detail = "10 transforms, identities and oracles; salt-pepper " + std::to_string(changed) +
             ", gamma(128,2)=" + std::to_string(g128);
}

std::string diacritic_corpus() {
  const char32_t bases[] = {0x0628, 0x062A, 0x0633, 0x0644, 0x0645, 0x0646, 0x06A9};
  std::u32string text;
  for (char32_t b : bases) {
    for (char32_t mark = 0x0654; mark <= 0x0657; ++mark) {
      text += b;
      text += mark;
      text += U"ر ";
    }
  }
  text += U"سلام کٲشُر";
  return oracle::encode(text);
}

void label_round_trip(Checks& c) {
  GeneratorConfig base = base_config(1000);
  base.corpus_path.clear();
  base.corpus_text = diacritic_corpus();
  const Generator gen(base);
  std::vector<std::string> expected(1000);
  for (std::uint64_t i = 0; i < 1000; ++i) expected[i] = gen.render_slot(i).record.label;
  std::size_t with_marks = 0;
  for (const std::string& l : expected) {
    for (char32_t ch : oracle::decode(l)) {
      if (ch >= 0x0654 && ch <= 0x0657) {
        ++with_marks;
        break;
      }
    }
  }
  c.expect(with_marks > 0, "no label carries U+0654..U+0657");

  for (OutputFormat f : {OutputFormat::kCrnn, OutputFormat::kTrocr, OutputFormat::kCsv,
                         OutputFormat::kHuggingface}) {
    GeneratorConfig cfg = base;
    cfg.format = f;
    cfg.storage = StorageMode::kFiles;
    cfg.output = scratch(std::string("labels-") + to_string(f)).string();
    generate(cfg);
    std::size_t decoded = 0, mismatched = 0;
    for (bool train : {true, false}) {
      const Bytes raw = read_file(fs::path(cfg.output) / label_file_name(f, train));
      const std::string content(raw.begin(), raw.end());
      for (const LabelEntry& e : decode_labels(content, f)) {
        const std::string name = fs::path(e.image).filename().string();
        const std::size_t idx = std::stoul(name.substr(6, 6));
        ++decoded;
        if (idx >= expected.size() || expected[idx] != e.text) ++mismatched;
      }
      if (f == OutputFormat::kCrnn && train) {
        const std::string line = "image_000001.png\t" + expected[1] + "\n";
        c.expect(content.find("\n" + line) != std::string::npos ||
                     content.rfind(label_file_preamble(f) + line, 0) == 0,
                 "crnn line for index 1 missing");
      }
    }
    c.expect(decoded == 1000, std::string(to_string(f)) + " decoded " + std::to_string(decoded));
    c.expect(mismatched == 0, std::string(to_string(f)) + " mismatches " +
                                  std::to_string(mismatched));
    fs::remove_all(cfg.output);
  }
  c.detail = "4 formats x 1000 labels exact, " + std::to_string(with_marks) +
             " labels with U+0654..U+0657";
}

void archive_integrity(Checks& c) {
  GeneratorConfig z = base_config(300);
  z.output = scratch("integrity.zip").string();
  generate(z);
  const VerifyReport fresh_zip = verify(z.output);
  c.expect(fresh_zip.ok(), "fresh zip has " + std::to_string(fresh_zip.failures.size()) +
                               " failures");

  GeneratorConfig f = base_config(300);
  f.storage = StorageMode::kFiles;
  f.output = scratch("integrity-files").string();
  generate(f);
  const VerifyReport fresh = verify(f.output);
  c.expect(fresh.ok(), "fresh files dataset has failures");

  const fs::path victim = fs::path(f.output) / "images" / filename_for(7);
  const Bytes original = read_file(victim);
  fs::resize_file(victim, 4);
  const VerifyReport truncated = verify(f.output);
  c.expect(truncated.failures.size() == 1 && truncated.failures[0].path.find(filename_for(7)) !=
                                                 std::string::npos,
           "truncated PNG gave " + std::to_string(truncated.failures.size()) + " failures");
  write_file(victim, original);
  c.expect(verify(f.output).ok(), "restored dataset not clean");

  const fs::path labels = fs::path(f.output) / label_file_name(f.format, true);
  const Bytes raw = read_file(labels);
  std::string text(raw.begin(), raw.end());
  const auto start = text.find('\n') + 1;
  text.erase(start, text.find('\n', start) + 1 - start);
  write_file(labels, Bytes(text.begin(), text.end()));
  const VerifyReport deleted = verify(f.output);
  c.expect(deleted.failures.size() == 1,
           "deleted label line gave " + std::to_string(deleted.failures.size()) + " failures");
  c.detail = "fresh 0/0 failures, truncated PNG " + std::to_string(truncated.failures.size()) +
             ", deleted line " + std::to_string(deleted.failures.size());
  fs::remove(z.output);
  fs::remove_all(f.output);
}

std::string random_corpus(Lcg& rng) {
  static const std::u32string alphabet =
      U"abcXYZ019ابتسلمنیۂِ"
      U"      \t\n\r ،؛.!?؟۔:;,";
  std::u32string out;
  const auto n = rng.int_range(0, 200);
  for (std::int64_t i = 0; i < n; ++i) {
    out.push_back(alphabet[static_cast<std::size_t>(rng.int_range(0, alphabet.size() - 1))]);
  }
  return oracle::encode(out);
}

bool is_mark(char32_t ch) {
  return (U_GET_GC_MASK(static_cast<UChar32>(ch)) & U_GC_M_MASK) != 0;
}

void segmentation_oracle(Checks& c) {
  auto split = [](const std::string& text, SegmentationMode mode) {
    SegmentationConfig sc;
    sc.mode = mode;
    return segment(Corpus::from_text(text), sc);
  };
  Lcg rng(2024);
  int corpora = 0, disagreements = 0;
  while (corpora < 100) {
    const std::string text = random_corpus(rng);
    if (text.empty()) continue;
    ++corpora;
    if (split(text, SegmentationMode::kWord) != oracle::words(text)) ++disagreements;
    if (split(text, SegmentationMode::kSentence) != oracle::sentences(text)) ++disagreements;
    if (split(text, SegmentationMode::kLine) != oracle::lines(text)) ++disagreements;
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " splitter disagreements");

  static const std::u32string bases = U"abXYابتسلمنک";
  static const std::u32string marks = U"َِٕٖٔٗ́";
  Lcg fz(99);
  int split_marks = 0, lost = 0;
  for (int i = 0; i < 100000; ++i) {
    std::u32string s;
    const auto clusters = fz.int_range(1, 8);
    for (std::int64_t k = 0; k < clusters; ++k) {
      if (k > 0 && fz.bernoulli(0.3)) s += U' ';
      s += bases[static_cast<std::size_t>(fz.int_range(0, bases.size() - 1))];
      const auto nm = fz.int_range(0, 3);
      for (std::int64_t m = 0; m < nm; ++m) {
        s += marks[static_cast<std::size_t>(fz.int_range(0, marks.size() - 1))];
      }
    }
    std::u32string joined;
    for (const std::string& seg : split(oracle::encode(s), SegmentationMode::kChar)) {
      const std::u32string u = oracle::decode(seg);
      if (u.empty() || is_mark(u.front())) ++split_marks;
      joined += u;
    }
    std::u32string stripped;
    for (char32_t ch : s) {
      if (ch != U' ') stripped += ch;
    }
    if (joined != stripped) ++lost;
  }
  c.expect(split_marks == 0, std::to_string(split_marks) + " segments start with a mark");
  c.expect(lost == 0, std::to_string(lost) + " fuzz strings lost code points");
  c.detail = "100 corpora x 3 modes agree; 1e5 char-mode fuzz strings, " +
             std::to_string(split_marks) + " detached marks";
}

/// Runs the CLI as a child process and returns its peak RSS in KiB.
long spawn_peak_rss_kib(const std::vector<std::string>& args, int& status) {
  std::vector<char*> argv;
  for (const std::string& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, 1, "/dev/null", O_WRONLY, 0);
  posix_spawn_file_actions_addopen(&actions, 2, "/dev/null", O_WRONLY, 0);
  pid_t pid = 0;
  const int rc = posix_spawn(&pid, argv[0], &actions, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) {
    status = -1;
    return -1;
  }
  struct rusage usage {};
  int st = 0;
  wait4(pid, &st, 0, &usage);
  status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return usage.ru_maxrss;
}

void memory_property(Checks& c) {
  if (g_cli.empty() || !fs::exists(g_cli)) {
    c.expect(false, "textsynth executable not available (--cli)");
    return;
  }
  const fs::path out = scratch("memory-files");
  int status = 0;
  const auto t0 = std::chrono::steady_clock::now();
  const long kib = spawn_peak_rss_kib(
      {g_cli, "generate", "--corpus", oracle::corpus_path(), "--font",
       oracle::font_path("DejaVuSans.ttf"), "--count", "50000", "--width", "256", "--height",
       "64", "--storage", "files", "--output", out.string()},
      status);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(status == 0, "generate exited with " + std::to_string(status));
  std::size_t images = 0;
  if (fs::exists(out / "images")) {
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(out / "images")) ++images;
  }
  c.expect(images == 50000, "wrote " + std::to_string(images) + " images");
  const double mib = static_cast<double>(kib) / 1024.0;
  c.expect(kib > 0 && mib < 512.0, "peak RSS " + fmt(mib, 1) + " MiB");
  c.detail = "50000 files, peak RSS " + fmt(mib, 1) + " MiB, " + fmt(secs, 1) + " s";
  fs::remove_all(out);
}

void throughput_report(Checks& c) {
  std::ostringstream out;
  const int code = run_cli({"textsynth", "bench", "--corpus", oracle::corpus_path(), "--font",
                            oracle::font_path("DejaVuSans.ttf"), "--sizes", "1000,10000,50000",
                            "--workers", "1", "--json"},
                           out, std::cerr);
  c.expect(code == kExitOk, "bench exited with " + std::to_string(code));
  if (code != kExitOk) return;
  const auto rows = nlohmann::json::parse(out.str());
  std::vector<std::uint64_t> sizes;
  std::ostringstream os;
  for (const auto& r : rows) {
    sizes.push_back(r["samples"].get<std::uint64_t>());
    const double rate = r["samples_per_second"].get<double>();
    c.expect(rate > 0.0, "non-positive rate");
    os << (sizes.size() > 1 ? ", " : "") << sizes.back() << ": " << fmt(rate, 1) << "/s";
  }
  c.expect(sizes == std::vector<std::uint64_t>{1000, 10000, 50000}, "sizes missing from table");
  c.detail = "single worker " + os.str() + " (report only)";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<std::string> only;
  app.add_option("--cli", g_cli, "Path to the textsynth executable");
  app.add_option("--only", only, "Run only the named criteria");
  CLI11_PARSE(app, argc, argv);

  g_scratch = fs::temp_directory_path() / ("textsynth-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(g_scratch);

  const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria = {
      {"determinism", determinism},
      {"font-distribution", font_distribution},
      {"clean-fraction", clean_fraction},
      {"transforms-per-sample", transforms_per_sample},
      {"prng-conformance", prng_conformance},
      {"transform-oracles", transform_oracles},
      {"label-round-trip", label_round_trip},
      {"archive-integrity", archive_integrity},
      {"segmentation-oracle", segmentation_oracle},
      {"memory-files-mode", memory_property},
      {"throughput-report", throughput_report},
  };

  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
    Checks checks;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(checks);
    } catch (const std::exception& e) {
      checks.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = checks.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << checks.detail << " ["
              << fmt(secs, 1) << " s]";
    for (const std::string& f : checks.failures) std::cout << "\n    " << f;
    std::cout << std::endl;
  }
  fs::remove_all(g_scratch);
  return std::min(failed, 125);
}
