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


#include "textsynth/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "textsynth/error.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace textsynth {
namespace {

std::string format_range(const CodePointRange& r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04X-%04X", static_cast<unsigned>(r.lo),
                static_cast<unsigned>(r.hi));
  return buf;
}

const char* to_string(SizeDistribution d) {
  return d == SizeDistribution::kNormal ? "normal" : "uniform";
}

std::optional<double> parse_number(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// Collects typed reads from a JSON document, turning every mismatch into
// a FieldIssue instead of throwing at the first one.
class Reader {
 public:
  std::vector<FieldIssue> issues;

  void unknown_keys(const json& obj, const std::string& path,
                    std::initializer_list<const char*> known) {
    if (!obj.is_object()) return;
    std::set<std::string> k(known.begin(), known.end());
    for (const auto& [key, value] : obj.items()) {
      if (!k.count(key)) issues.push_back({join(path, key), "unknown field"});
    }
  }

  bool object(const json& j, const std::string& path) {
    if (j.is_object()) return true;
    issues.push_back({path, "must be an object"});
    return false;
  }

  template <typename T>
  void number(const json& obj, const std::string& path, const char* key, T& out) {
    if (!obj.contains(key)) return;
    const json& v = obj[key];
    const std::string p = join(path, key);
    if (!v.is_number()) {
      issues.push_back({p, "must be a number"});
      return;
    }
    if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer() && !(v.is_number_float() && std::floor(v.get<double>()) == v.get<double>())) {
        issues.push_back({p, "must be an integer"});
        return;
      }
      const double d = v.get<double>();
      if (std::is_unsigned_v<T> && d < 0) {
        issues.push_back({p, "must not be negative"});
        return;
      }
      if (v.is_number_unsigned()) {
        out = static_cast<T>(v.get<std::uint64_t>());
      } else if (v.is_number_integer()) {
        out = static_cast<T>(v.get<std::int64_t>());
      } else {
        out = static_cast<T>(d);
      }
    } else {
      out = v.get<T>();
    }
  }

  void boolean(const json& obj, const std::string& path, const char* key, bool& out) {
    if (!obj.contains(key)) return;
    if (!obj[key].is_boolean()) {
      issues.push_back({join(path, key), "must be a boolean"});
      return;
    }
    out = obj[key].get<bool>();
  }

  bool string(const json& obj, const std::string& path, const char* key, std::string& out) {
    if (!obj.contains(key)) return false;
    if (!obj[key].is_string()) {
      issues.push_back({join(path, key), "must be a string"});
      return false;
    }
    out = obj[key].get<std::string>();
    return true;
  }

  void range(const json& obj, const std::string& path, const char* key, ParamRange& out) {
    if (!obj.contains(key)) return;
    const json& v = obj[key];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      issues.push_back({join(path, key), "must be a [lo, hi] pair of numbers"});
      return;
    }
    out = {v[0].get<double>(), v[1].get<double>()};
  }

  Rgb color(const json& v, const std::string& path) {
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (auto c = parse_hex_color(s)) return *c;
      if (auto c = background_preset(s)) return *c;
    }
    issues.push_back({path, "must be #RRGGBB or a preset name"});
    return {};
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }
};

ordered_json background_to_json(const BackgroundSpec& b, bool with_percentage) {
  ordered_json j;
  switch (b.mode) {
    case BackgroundSpec::Mode::kColor:
      j["mode"] = "color";
      j["color"] = to_hex(b.color);
      break;
    case BackgroundSpec::Mode::kImage:
      j["mode"] = "image";
      j["path"] = b.image_path;
      break;
    case BackgroundSpec::Mode::kMix: {
      j["mode"] = "mix";
      ordered_json opts = ordered_json::array();
      for (const BackgroundSpec& o : b.options) opts.push_back(background_to_json(o, true));
      j["options"] = std::move(opts);
      break;
    }
  }
  if (!b.name.empty()) j["name"] = b.name;
  if (with_percentage) j["percentage"] = b.percentage;
  return j;
}

BackgroundSpec background_from_json(Reader& r, const json& j, const std::string& path,
                                    bool option) {
  BackgroundSpec b;
  if (!r.object(j, path)) return b;
  if (option) {
    r.unknown_keys(j, path, {"mode", "color", "path", "name", "percentage"});
  } else {
    r.unknown_keys(j, path, {"mode", "color", "path", "name", "options"});
  }
  std::string mode = "color";
  r.string(j, path, "mode", mode);
  r.string(j, path, "name", b.name);
  if (mode == "color") {
    b.mode = BackgroundSpec::Mode::kColor;
    if (j.contains("color")) {
      b.color = r.color(j["color"], Reader::join(path, "color"));
      if (b.name.empty() && j["color"].is_string() && background_preset(j["color"].get<std::string>())) {
        b.name = j["color"].get<std::string>();
      }
    }
  } else if (mode == "image") {
    b.mode = BackgroundSpec::Mode::kImage;
    if (!r.string(j, path, "path", b.image_path)) {
      r.issues.push_back({Reader::join(path, "path"), "image background needs a path"});
    }
  } else if (mode == "mix" && !option) {
    b.mode = BackgroundSpec::Mode::kMix;
    if (!j.contains("options") || !j["options"].is_array()) {
      r.issues.push_back({Reader::join(path, "options"), "must be an array"});
    } else {
      for (const json& o : j["options"]) {
        b.options.push_back(background_from_json(r, o, path + ".options[]", true));
      }
    }
  } else {
    r.issues.push_back({Reader::join(path, "mode"),
                        option ? "must be color or image" : "must be color, image or mix"});
  }
  if (option) {
    b.percentage = 100.0;
    r.number(j, path, "percentage", b.percentage);
  }
  return b;
}

void apply_json(GeneratorConfig& c, const json& j) {
  Reader r;
  if (!j.is_object()) throw ConfigError("", "configuration must be a JSON object");
  r.unknown_keys(j, "", {"corpus", "segmentation", "script", "layout", "fonts", "size",
                         "background", "augmentation", "count", "width", "height",
                         "seed", "split", "output", "memory_budget", "timestamp",
                         "workers"});

  if (j.contains("corpus") && r.object(j["corpus"], "corpus")) {
    const json& o = j["corpus"];
    r.unknown_keys(o, "corpus", {"path", "text"});
    std::string text;
    if (r.string(o, "corpus", "path", c.corpus_path)) c.corpus_text.reset();
    if (r.string(o, "corpus", "text", text)) c.corpus_text = text;
  }
  if (j.contains("segmentation") && r.object(j["segmentation"], "segmentation")) {
    const json& o = j["segmentation"];
    r.unknown_keys(o, "segmentation",
                   {"mode", "min_graphemes", "max_graphemes", "ngram_min", "ngram_max"});
    std::string mode;
    if (r.string(o, "segmentation", "mode", mode)) {
      if (auto m = parse_segmentation_mode(mode)) {
        c.segmentation.mode = *m;
      } else {
        r.issues.push_back({"segmentation.mode", "must be char, word, ngram, sentence or line"});
      }
    }
    r.number(o, "segmentation", "min_graphemes", c.segmentation.min_graphemes);
    r.number(o, "segmentation", "max_graphemes", c.segmentation.max_graphemes);
    r.number(o, "segmentation", "ngram_min", c.segmentation.ngram_min);
    r.number(o, "segmentation", "ngram_max", c.segmentation.ngram_max);
  }
  if (j.contains("script") && r.object(j["script"], "script")) {
    const json& o = j["script"];
    r.unknown_keys(o, "script", {"ranges", "preserved_diacritics"});
    auto ranges = [&](const char* key, std::vector<CodePointRange>& out) {
      if (!o.contains(key)) return;
      const std::string path = std::string("script.") + key;
      if (!o[key].is_array()) {
        r.issues.push_back({path, "must be an array of HEXLO-HEXHI strings"});
        return;
      }
      out.clear();
      for (const json& v : o[key]) {
        try {
          if (!v.is_string()) throw Error(ErrorCode::kInvalidArgument, "");
          out.push_back(parse_code_point_range(v.get<std::string>()));
        } catch (const Error&) {
          r.issues.push_back({path, "bad range " + v.dump() + ", expected HEXLO-HEXHI"});
        }
      }
    };
    ranges("ranges", c.script.allowed);
    ranges("preserved_diacritics", c.script.preserved_diacritics);
  }
  if (j.contains("layout") && r.object(j["layout"], "layout")) {
    const json& o = j["layout"];
    r.unknown_keys(o, "layout", {"direction", "alignment", "padding_left", "padding_right",
                                 "text_color", "antialias"});
    std::string s;
    if (r.string(o, "layout", "direction", s)) {
      if (auto d = parse_direction(s)) c.direction = *d;
      else r.issues.push_back({"layout.direction", "must be rtl or ltr"});
    }
    if (r.string(o, "layout", "alignment", s)) {
      if (auto a = parse_alignment(s)) c.alignment = *a;
      else r.issues.push_back({"layout.alignment", "must be left, center or right"});
    }
    r.number(o, "layout", "padding_left", c.pad_left);
    r.number(o, "layout", "padding_right", c.pad_right);
    if (o.contains("text_color")) c.text_color = r.color(o["text_color"], "layout.text_color");
    r.boolean(o, "layout", "antialias", c.antialias);
  }
  if (j.contains("fonts")) {
    if (!j["fonts"].is_array()) {
      r.issues.push_back({"fonts", "must be an array"});
    } else {
      c.fonts.clear();
      for (const json& f : j["fonts"]) {
        FontSpec spec;
        if (!r.object(f, "fonts[]")) continue;
        r.unknown_keys(f, "fonts[]", {"path", "percentage"});
        if (!r.string(f, "fonts[]", "path", spec.path)) {
          r.issues.push_back({"fonts[].path", "is required"});
        }
        if (f.contains("percentage") && !f["percentage"].is_null()) {
          double p = 0.0;
          r.number(f, "fonts[]", "percentage", p);
          spec.percentage = p;
        }
        c.fonts.push_back(std::move(spec));
      }
    }
  }
  if (j.contains("size") && r.object(j["size"], "size")) {
    const json& o = j["size"];
    r.unknown_keys(o, "size", {"min", "max", "distribution"});
    r.number(o, "size", "min", c.size.min_px);
    r.number(o, "size", "max", c.size.max_px);
    std::string d;
    if (r.string(o, "size", "distribution", d)) {
      if (d == "normal") c.size.distribution = SizeDistribution::kNormal;
      else if (d == "uniform") c.size.distribution = SizeDistribution::kUniform;
      else r.issues.push_back({"size.distribution", "must be normal or uniform"});
    }
  }
  if (j.contains("background")) {
    c.background = background_from_json(r, j["background"], "background", false);
  }
  if (j.contains("augmentation") && r.object(j["augmentation"], "augmentation")) {
    const json& o = j["augmentation"];
    const std::string p = "augmentation";
    AugmentationConfig& a = c.augmentation;
    r.unknown_keys(o, p, {"p_aug", "m_max", "enabled", "rotation_max", "skew_max",
                          "blur_sigma", "motion_length", "noise_sigma", "salt_pepper",
                          "jpeg_quality", "resolution", "brightness", "contrast"});
    r.number(o, p, "p_aug", a.p_aug);
    r.number(o, p, "m_max", a.m_max);
    if (o.contains("enabled")) {
      if (!o["enabled"].is_array()) {
        r.issues.push_back({"augmentation.enabled", "must be an array of transform names"});
      } else {
        a.enabled.clear();
        for (const json& v : o["enabled"]) {
          std::optional<TransformKind> k;
          if (v.is_string()) k = parse_transform_kind(v.get<std::string>());
          if (k) a.enabled.push_back(*k);
          else r.issues.push_back({"augmentation.enabled", "unknown transform " + v.dump()});
        }
        a.normalize();
      }
    }
    r.number(o, p, "rotation_max", a.rotation_max_deg);
    r.number(o, p, "skew_max", a.skew_max);
    r.range(o, p, "blur_sigma", a.blur_sigma);
    r.range(o, p, "motion_length", a.motion_length);
    r.range(o, p, "noise_sigma", a.noise_sigma);
    r.range(o, p, "salt_pepper", a.salt_pepper);
    r.range(o, p, "jpeg_quality", a.jpeg_quality);
    r.range(o, p, "resolution", a.resolution);
    r.range(o, p, "brightness", a.brightness);
    r.range(o, p, "contrast", a.contrast);
  }
  r.number(j, "", "count", c.count);
  r.number(j, "", "width", c.width);
  r.number(j, "", "height", c.height);
  r.number(j, "", "seed", c.seed);
  r.number(j, "", "split", c.split);
  r.number(j, "", "memory_budget", c.memory_budget);
  r.boolean(j, "", "timestamp", c.timestamp);
  r.number(j, "", "workers", c.workers);
  if (j.contains("output") && r.object(j["output"], "output")) {
    const json& o = j["output"];
    r.unknown_keys(o, "output", {"format", "storage", "batch_size", "path"});
    std::string s;
    if (r.string(o, "output", "format", s)) {
      if (auto f = parse_output_format(s)) c.format = *f;
      else r.issues.push_back({"output.format", "must be crnn, trocr, csv or huggingface"});
    }
    if (r.string(o, "output", "storage", s)) {
      if (auto m = parse_storage_mode(s)) c.storage = *m;
      else r.issues.push_back({"output.storage", "must be zip, chunked or files"});
    }
    r.number(o, "output", "batch_size", c.batch_size);
    r.string(o, "output", "path", c.output);
  }
  if (!r.issues.empty()) throw ConfigError(std::move(r.issues));
}

}  // namespace

void GeneratorConfig::validate() const {
  std::vector<FieldIssue> issues;
  auto collect = [&](auto&& fn) {
    try {
      fn();
    } catch (const ConfigError& e) {
      issues.insert(issues.end(), e.issues().begin(), e.issues().end());
    }
  };
  if (!corpus_text && corpus_path.empty()) {
    issues.push_back({"corpus", "a corpus path or inline text is required"});
  }
  collect([&] { segmentation.validate(); });
  collect([&] { script.validate(); });
  collect([&] { size.validate(); });
  collect([&] { background.validate(); });
  collect([&] { augmentation.validate(); });
  if (fonts.empty()) {
    issues.push_back({"fonts", "at least one font is required"});
  } else {
    for (const FontSpec& f : fonts) {
      if (f.path.empty()) issues.push_back({"fonts[].path", "is required"});
    }
    collect([&] {
      for (std::string& p : check_percentages(resolve_percentages(fonts))) {
        issues.push_back({"fonts[].percentage", std::move(p)});
      }
    });
  }
  if (count < 1) issues.push_back({"count", "must be at least 1"});
  if (width < 8) issues.push_back({"width", "must be at least 8"});
  if (height < 8) issues.push_back({"height", "must be at least 8"});
  if (width > 8192 || height > 8192) issues.push_back({"width", "images are limited to 8192 pixels per side"});
  if (!(split > 0.0 && split < 1.0)) issues.push_back({"split", "must lie within (0, 1)"});
  if (!(pad_left >= 0.0) || !(pad_right >= 0.0)) {
    issues.push_back({"layout.padding_left", "paddings must be non-negative"});
  } else if (pad_left + pad_right >= width) {
    issues.push_back({"layout.padding_right", "paddings leave no room for text"});
  }
  if (batch_size < 1) issues.push_back({"output.batch_size", "must be at least 1"});
  if (memory_budget < 1) issues.push_back({"memory_budget", "must be positive"});
  if (workers < 1 || workers > kMaxWorkers) {
    issues.push_back({"workers", "must lie within [1, " + std::to_string(kMaxWorkers) + "]"});
  }
  if (!issues.empty()) throw ConfigError(std::move(issues));
}

ordered_json GeneratorConfig::to_json(bool runtime) const {
  ordered_json j;
  j["corpus"] = corpus_text ? ordered_json{{"text", *corpus_text}}
                            : ordered_json{{"path", corpus_path}};
  j["segmentation"] = {{"mode", to_string(segmentation.mode)},
                       {"min_graphemes", segmentation.min_graphemes},
                       {"max_graphemes", segmentation.max_graphemes},
                       {"ngram_min", segmentation.ngram_min},
                       {"ngram_max", segmentation.ngram_max}};
  ordered_json ranges = ordered_json::array();
  for (const auto& r : script.allowed) ranges.push_back(format_range(r));
  ordered_json marks = ordered_json::array();
  for (const auto& r : script.preserved_diacritics) marks.push_back(format_range(r));
  j["script"] = {{"ranges", ranges}, {"preserved_diacritics", marks}};
  j["layout"] = {{"direction", to_string(direction)},
                 {"alignment", to_string(alignment)},
                 {"padding_left", pad_left},
                 {"padding_right", pad_right},
                 {"text_color", to_hex(text_color)},
                 {"antialias", antialias}};
  ordered_json fs = ordered_json::array();
  for (const FontSpec& f : fonts) {
    ordered_json e;
    e["path"] = f.path;
    if (f.percentage) e["percentage"] = *f.percentage;
    fs.push_back(std::move(e));
  }
  j["fonts"] = std::move(fs);
  j["size"] = {{"min", size.min_px}, {"max", size.max_px},
               {"distribution", to_string(size.distribution)}};
  j["background"] = background_to_json(background, false);
  const AugmentationConfig& a = augmentation;
  ordered_json enabled = ordered_json::array();
  for (TransformKind k : a.enabled) enabled.push_back(to_string(k));
  auto pair = [](const ParamRange& r) { return ordered_json::array({r.lo, r.hi}); };
  j["augmentation"] = {{"p_aug", a.p_aug},
                       {"m_max", a.m_max},
                       {"enabled", enabled},
                       {"rotation_max", a.rotation_max_deg},
                       {"skew_max", a.skew_max},
                       {"blur_sigma", pair(a.blur_sigma)},
                       {"motion_length", pair(a.motion_length)},
                       {"noise_sigma", pair(a.noise_sigma)},
                       {"salt_pepper", pair(a.salt_pepper)},
                       {"jpeg_quality", pair(a.jpeg_quality)},
                       {"resolution", pair(a.resolution)},
                       {"brightness", pair(a.brightness)},
                       {"contrast", pair(a.contrast)}};
  j["count"] = count;
  j["width"] = width;
  j["height"] = height;
  j["seed"] = seed;
  j["split"] = split;
  ordered_json out = {{"format", to_string(format)},
                      {"storage", to_string(storage)},
                      {"batch_size", batch_size}};
  if (runtime) out["path"] = output;
  j["output"] = std::move(out);
  j["memory_budget"] = memory_budget;
  j["timestamp"] = timestamp;
  if (runtime) j["workers"] = workers;
  return j;
}

GeneratorConfig GeneratorConfig::from_json(const json& j) {
  return merge(GeneratorConfig{}, j);
}

GeneratorConfig GeneratorConfig::merge(const GeneratorConfig& base, const json& j) {
  GeneratorConfig c = base;
  apply_json(c, j);
  return c;
}

bool operator==(const GeneratorConfig& a, const GeneratorConfig& b) {
  return a.to_json(true) == b.to_json(true);
}

std::vector<double> resolve_percentages(const std::vector<FontSpec>& fonts) {
  std::size_t given = 0;
  for (const FontSpec& f : fonts) given += f.percentage.has_value();
  if (given == 0) {
    return std::vector<double>(fonts.size(), fonts.empty() ? 0.0 : 100.0 / fonts.size());
  }
  if (given != fonts.size()) {
    throw ConfigError("fonts[].percentage",
                        "give a percentage for every font or for none of them");
  }
  std::vector<double> out;
  for (const FontSpec& f : fonts) out.push_back(*f.percentage);
  return out;
}

FontSpec parse_font_argument(const std::string& arg) {
  FontSpec spec;
  spec.path = arg;
  const auto colon = arg.rfind(':');
  if (colon != std::string::npos && colon > 0) {
    if (auto v = parse_number(std::string_view(arg).substr(colon + 1))) {
      spec.path = arg.substr(0, colon);
      spec.percentage = *v;
    }
  }
  return spec;
}

BackgroundSpec parse_background_argument(const std::string& arg) {
  std::string body = arg;
  double pct = std::numeric_limits<double>::quiet_NaN();
  const auto colon = arg.rfind(':');
  if (colon != std::string::npos && colon > 0) {
    if (auto v = parse_number(std::string_view(arg).substr(colon + 1))) {
      body = arg.substr(0, colon);
      pct = *v;
    }
  }
  BackgroundSpec spec;
  if (!body.empty() && body[0] == '#') {
    auto c = parse_hex_color(body);
    if (!c) throw ConfigError("background", "bad color " + body + ", expected #RRGGBB");
    spec = BackgroundSpec::solid(*c);
  } else if (auto c = background_preset(body)) {
    spec = BackgroundSpec::solid(*c, body);
  } else {
    spec.mode = BackgroundSpec::Mode::kImage;
    spec.image_path = body;
  }
  spec.percentage = pct;
  return spec;
}

BackgroundSpec combine_backgrounds(std::vector<BackgroundSpec> options) {
  if (options.empty()) return BackgroundSpec{};
  std::size_t given = 0;
  for (const BackgroundSpec& o : options) given += !std::isnan(o.percentage);
  if (given != 0 && given != options.size()) {
    throw ConfigError("background.options[].percentage",
                        "give a percentage for every background or for none of them");
  }
  if (given == 0) {
    for (BackgroundSpec& o : options) o.percentage = 100.0 / options.size();
  }
  if (options.size() == 1 && given == 0) {
    options[0].percentage = 100.0;
    return options[0];
  }
  BackgroundSpec mix;
  mix.mode = BackgroundSpec::Mode::kMix;
  mix.options = std::move(options);
  return mix;
}

}  // namespace textsynth
