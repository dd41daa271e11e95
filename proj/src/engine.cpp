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


#include "textsynth/engine.hpp"

#include <chrono>
#include <condition_variable>
#include <ctime>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "textsynth/error.hpp"
#include "textsynth/image_io.hpp"
#include "textsynth/unicode.hpp"

namespace fs = std::filesystem;

namespace textsynth {
namespace {

constexpr std::uint64_t kProgressInterval = 100;

std::string recipe_summary(const AugmentationRecipe& recipe) {
  if (recipe.steps.empty()) return "clean";
  std::string out;
  for (const TransformStep& s : recipe.steps) {
    if (!out.empty()) out += ',';
    out += to_string(s.kind);
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Per-run tallies, updated in index order by the coordinator.
struct Tally {
  std::uint64_t clean = 0;
  std::uint64_t augmented = 0;
  std::uint64_t segment_skips = 0;
  std::uint64_t missing_glyphs = 0;
  std::uint64_t codec_warnings = 0;
  std::vector<std::uint64_t> transforms = std::vector<std::uint64_t>(kAllTransforms.size());
  std::vector<std::uint64_t> fonts;
  std::vector<std::uint64_t> backgrounds;
  std::map<char32_t, std::uint64_t> characters;

  void add(const SlotResult& r) {
    if (r.recipe.steps.empty()) {
      ++clean;
    } else {
      ++augmented;
    }
    for (const TransformStep& s : r.recipe.steps) ++transforms[static_cast<std::size_t>(s.kind)];
    ++fonts[r.font_index];
    ++backgrounds[r.background_option];
    segment_skips += r.segment_skips;
    missing_glyphs += r.missing_glyphs;
    codec_warnings += r.warnings.size();
    for (char32_t c : unicode::decode(r.record.label)) ++characters[c];
  }
};

}  // namespace

MemoryGuard::MemoryGuard(std::size_t budget) : budget_(budget) {
  if (budget == 0) throw Error(ErrorCode::kInvalidArgument, "memory budget must be positive");
}

bool MemoryGuard::update(std::size_t buffered) {
  const double ratio = static_cast<double>(buffered) / static_cast<double>(budget_);
  if (!throttled_ && ratio > 0.7) {
    throttled_ = true;
    ++events_;
  } else if (throttled_ && ratio < 0.5) {
    throttled_ = false;
  }
  return throttled_;
}

Corpus load_corpus(const GeneratorConfig& config) {
  if (config.corpus_text) return Corpus::from_text(*config.corpus_text, "inline");
  return Corpus::load(config.corpus_path);
}

Generator::Generator(GeneratorConfig config) : config_(std::move(config)) {
  config_.script.canonicalize();
  config_.augmentation.normalize();
  config_.validate();

  prepared_ = prepare(load_corpus(config_), config_.segmentation, config_.script);
  Lcg master(config_.seed);
  shuffle_in_place(prepared_.segments, master);

  percentages_ = resolve_percentages(config_.fonts);
  std::vector<FontEntry> entries;
  for (std::size_t i = 0; i < config_.fonts.size(); ++i) {
    entries.push_back(load_font(config_.fonts[i].path, percentages_[i]));
  }
  fonts_ = FontSet(std::move(entries));
  for (const FontEntry& e : fonts_.entries()) {
    std::string name = e.display_name;
    int n = 1;
    while (std::find(font_names_.begin(), font_names_.end(), name) != font_names_.end()) {
      name = e.display_name + " #" + std::to_string(++n);
    }
    font_names_.push_back(name);
    if (auto w = coverage_warning(*e.face, config_.script)) warnings_.push_back(*w);
  }
  backgrounds_ = std::make_unique<BackgroundLibrary>(config_.background, config_.width,
                                                     config_.height);
}

SlotResult Generator::render_slot(std::uint64_t index) const {
  SlotResult out;
  Lcg rng = substream_for_sample(config_.seed, index);
  out.font_index = select_font_index(percentages_, rng);
  const int size = sample_size(config_.size, rng);
  const ResolvedBackground bg = backgrounds_->resolve(rng);
  out.background_option = bg.option;
  out.recipe = plan_recipe(config_.augmentation, rng);

  const auto& segments = prepared_.segments;
  const std::size_t m = segments.size();
  std::size_t seg = static_cast<std::size_t>(index % m);
  const FontEntry& font = fonts_[out.font_index];
  std::optional<RenderPlan> plan;
  for (std::size_t attempt = 0; attempt < m; ++attempt) {
    plan = make_plan(segments[seg].text, font.face, size, config_.width, config_.direction,
                     config_.alignment, config_.pad_left, config_.pad_right);
    if (plan) break;
    ++out.segment_skips;
    seg = (seg + 1) % m;
  }
  if (!plan) {
    throw Error(ErrorCode::kUnfitText,
                "no segment fits the canvas at the minimum font size (slot " +
                    std::to_string(index) + ")");
  }
  out.segment_index = seg;
  plan->font_name = font_names_[out.font_index];
  plan->text_color = config_.text_color;
  plan->antialias = config_.antialias;
  plan->background = bg;
  out.missing_glyphs = static_cast<std::uint64_t>(plan->run.missing_glyphs);

  RasterImage image = render(*plan, backgrounds_->render(bg));
  image = apply(image, out.recipe, bg.base_color, &out.warnings);

  out.record.index = index;
  out.record.image_png = encode_png(image);
  out.record.label = plan->text;
  out.record.font_used = plan->font_name;
  out.record.size_used = plan->size_px;
  out.record.recipe_summary = recipe_summary(out.recipe);
  out.plan = std::move(*plan);
  return out;
}

std::vector<SampleRecord> Generator::preview(std::size_t count) const {
  if (count > kMaxPreviewCount) {
    throw ConfigError("count", "preview is limited to " + std::to_string(kMaxPreviewCount) +
                                   " samples");
  }
  std::vector<SampleRecord> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(render_slot(i).record);
  return out;
}

DatasetManifest Generator::generate(const ProgressCallback& progress,
                                    const std::atomic<bool>* cancel) const {
  if (config_.output.empty()) throw ConfigError("output.path", "an output path is required");
  const fs::path out = config_.output;
  const bool existed = fs::exists(out);
  try {
    return run(progress, cancel);
  } catch (const std::exception& e) {
    std::error_code ec;
    switch (config_.storage) {
      case StorageMode::kZip:
        fs::remove(out.string() + ".partial", ec);
        break;
      case StorageMode::kChunked:
        if (!existed || fs::is_empty(out, ec)) {
          fs::remove_all(out, ec);
        } else {
          for (const auto& entry : fs::directory_iterator(out, ec)) {
            const std::string name = entry.path().filename().string();
            if (name.rfind(kChunkPrefix, 0) == 0) fs::remove(entry.path(), ec);
          }
        }
        break;
      case StorageMode::kFiles:
        if (fs::is_directory(out, ec)) {
          std::ofstream marker(out / "FAILED", std::ios::binary | std::ios::trunc);
          marker << e.what() << "\n";
        }
        break;
    }
    throw;
  }
}

DatasetManifest Generator::run(const ProgressCallback& progress,
                               const std::atomic<bool>* cancel) const {
  const std::uint64_t n = config_.count;
  SinkOptions opts;
  opts.output = config_.output;
  opts.format = config_.format;
  opts.mode = config_.storage;
  opts.total = n;
  opts.train = train_count(n, config_.split);
  opts.batch_size = config_.batch_size;
  auto sink = open_sink(opts);

  Tally tally;
  tally.fonts.assign(fonts_.size(), 0);
  tally.backgrounds.assign(backgrounds_->option_count(), 0);
  MemoryGuard guard(config_.memory_budget);
  const auto started = std::chrono::steady_clock::now();

  auto report = [&](std::uint64_t produced, std::size_t buffered) {
    if (!progress) return;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    ProgressEvent ev;
    ev.produced = produced;
    ev.total = n;
    ev.rate = secs > 0.0 ? static_cast<double>(produced) / secs : 0.0;
    ev.segment_skips = tally.segment_skips;
    ev.memory_buffered = buffered;
    progress(ev);
  };
  auto check_cancel = [&] {
    if (cancel != nullptr && cancel->load()) {
      throw Error(ErrorCode::kCancelled, "generation cancelled");
    }
  };

  // Called in ascending index order; returns the throttle state.
  auto emit = [&](SlotResult& r, std::size_t pending_bytes) {
    tally.add(r);
    sink->add(r.record);
    const std::size_t buffered = sink->buffered_bytes();
    const bool throttled = guard.update(buffered);
    const std::uint64_t produced = r.record.index + 1;
    if (produced % kProgressInterval == 0 && produced != n) {
      report(produced, buffered + pending_bytes);
    }
    return throttled;
  };

  const int workers = std::max(1, config_.workers);
  if (workers == 1) {
    for (std::uint64_t i = 0; i < n; ++i) {
      check_cancel();
      SlotResult r = render_slot(i);
      emit(r, 0);
    }
  } else {
    // Workers claim slots in ascending order inside a bounded window; the
    // coordinator reorders completions and feeds the sink in index order.
    const std::uint64_t full_window = static_cast<std::uint64_t>(workers) * 4;
    std::mutex mu;
    std::condition_variable cv_work;
    std::condition_variable cv_done;
    std::uint64_t next_claim = 0;
    std::uint64_t emit_base = 0;
    std::uint64_t window = full_window;
    std::map<std::uint64_t, SlotResult> done;
    std::size_t done_bytes = 0;
    std::exception_ptr error;
    bool stop = false;

    auto worker = [&] {
      while (true) {
        std::uint64_t i = 0;
        {
          std::unique_lock lock(mu);
          cv_work.wait(lock, [&] {
            return stop || next_claim >= n || next_claim < emit_base + window;
          });
          if (stop || next_claim >= n) return;
          i = next_claim++;
        }
        try {
          SlotResult r = render_slot(i);
          std::lock_guard lock(mu);
          done_bytes += r.record.image_png.size();
          done.emplace(i, std::move(r));
          cv_done.notify_one();
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
          stop = true;
          cv_done.notify_all();
          cv_work.notify_all();
          return;
        }
      }
    };

    std::vector<std::thread> threads;
    auto shutdown = [&] {
      {
        std::lock_guard lock(mu);
        stop = true;
      }
      cv_work.notify_all();
      for (std::thread& t : threads) {
        if (t.joinable()) t.join();
      }
    };
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    try {
      for (std::uint64_t i = 0; i < n; ++i) {
        check_cancel();
        SlotResult r;
        std::size_t pending = 0;
        {
          std::unique_lock lock(mu);
          cv_done.wait(lock, [&] { return error || done.count(i) > 0; });
          if (error) std::rethrow_exception(error);
          auto it = done.find(i);
          r = std::move(it->second);
          done.erase(it);
          done_bytes -= r.record.image_png.size();
          pending = done_bytes;
        }
        const bool throttled = emit(r, pending);
        {
          std::lock_guard lock(mu);
          emit_base = i + 1;
          window = throttled ? 1 : full_window;
        }
        cv_work.notify_all();
      }
    } catch (...) {
      shutdown();
      throw;
    }
    shutdown();
  }

  DatasetManifest m;
  m.tool_version = kToolVersion;
  m.master_seed = config_.seed;
  if (config_.timestamp) m.timestamp = utc_timestamp();
  m.config = config_.to_json(false);
  m.format = to_string(config_.format);
  m.storage = to_string(config_.storage);
  m.total = n;
  m.train = opts.train;
  m.val = n - opts.train;
  m.clean = tally.clean;
  m.augmented = tally.augmented;
  m.statistics = {{"raw_segments", prepared_.raw_count},
                  {"length_filtered", prepared_.length_filtered},
                  {"script_rejected", prepared_.script_rejected},
                  {"valid_segments", prepared_.segments.size()},
                  {"segment_skips", tally.segment_skips},
                  {"dropped_slots", 0},
                  {"missing_glyphs", tally.missing_glyphs},
                  {"codec_warnings", tally.codec_warnings},
                  {"throttle_events", guard.events()}};
  for (TransformKind k : kAllTransforms) {
    m.transform_counts.emplace_back(to_string(k), tally.transforms[static_cast<std::size_t>(k)]);
  }
  for (std::size_t i = 0; i < fonts_.size(); ++i) {
    m.font_counts.emplace_back(font_names_[i], tally.fonts[i]);
  }
  std::vector<std::string> bg_names;
  for (std::size_t i = 0; i < backgrounds_->option_count(); ++i) {
    std::string name = backgrounds_->option_name(i);
    int k = 1;
    while (std::find(bg_names.begin(), bg_names.end(), name) != bg_names.end()) {
      name = backgrounds_->option_name(i) + " #" + std::to_string(++k);
    }
    bg_names.push_back(name);
    m.background_counts.emplace_back(name, tally.backgrounds[i]);
  }
  for (const auto& [c, count] : tally.characters) {
    m.character_histogram.emplace_back(unicode::encode(c), count);
  }
  sink->finish(m);
  report(n, 0);
  return m;
}

DatasetManifest generate(const GeneratorConfig& config, const ProgressCallback& progress,
                         const std::atomic<bool>* cancel) {
  return Generator(config).generate(progress, cancel);
}

std::vector<SampleRecord> preview(const GeneratorConfig& config, std::size_t count) {
  if (count > kMaxPreviewCount) {
    throw ConfigError("count", "preview is limited to " + std::to_string(kMaxPreviewCount) +
                                   " samples");
  }
  return Generator(config).preview(count);
}

}  // namespace textsynth
