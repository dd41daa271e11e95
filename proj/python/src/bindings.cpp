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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "textsynth/engine.hpp"
#include "textsynth/error.hpp"
#include "textsynth/prng.hpp"
#include "textsynth/textprep.hpp"

namespace py = pybind11;
using namespace textsynth;

namespace {

GeneratorConfig config_from(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  return GeneratorConfig::from_json(doc);
}

py::dict record_dict(const SampleRecord& r) {
  py::dict d;
  d["index"] = r.index;
  d["png"] = py::bytes(reinterpret_cast<const char*>(r.image_png.data()), r.image_png.size());
  d["label"] = r.label;
  d["font"] = r.font_used;
  d["size"] = r.size_used;
  d["recipe"] = r.recipe_summary;
  return d;
}

}  // namespace

PYBIND11_MODULE(_textsynth, m) {
  m.doc() = "Native core of the textsynth dataset generator";
  m.attr("__version__") = kToolVersion;

  static py::exception<Error> error_type(m, "TextsynthError", PyExc_RuntimeError);
  static py::exception<ConfigError> config_error_type(m, "ConfigError", error_type.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      py::list issues;
      for (const FieldIssue& i : e.issues()) issues.append(py::make_tuple(i.path, i.message));
      py::object exc = py::handle(config_error_type.ptr())(e.what());
      exc.attr("issues") = issues;
      PyErr_SetObject(config_error_type.ptr(), exc.ptr());
    } catch (const Error& e) {
      py::object exc = py::handle(error_type.ptr())(e.what());
      exc.attr("code") = to_string(e.code());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Lcg>(m, "Lcg")
      .def(py::init<std::uint64_t>(), py::arg("seed") = 42)
      .def_property_readonly("state", &Lcg::state)
      .def("next_state", &Lcg::next_state)
      .def("next", &Lcg::next)
      .def("uniform_range", &Lcg::uniform_range)
      .def("int_range", &Lcg::int_range)
      .def("bernoulli", &Lcg::bernoulli)
      .def("gaussian", &Lcg::gaussian);
  m.def("substream_for_sample", &substream_for_sample, py::arg("seed"), py::arg("index"));

  m.def(
      "segment",
      [](const std::string& text, const std::string& mode, int min_len, int max_len) {
        SegmentationConfig c;
        auto parsed = parse_segmentation_mode(mode);
        if (!parsed) throw ConfigError("segmentation.mode", "unrecognized value '" + mode + "'");
        c.mode = *parsed;
        c.min_graphemes = min_len;
        c.max_graphemes = max_len;
        c.validate();
        return segment(Corpus::from_text(text), c);
      },
      py::arg("text"), py::arg("mode") = "word", py::arg("min_len") = 1, py::arg("max_len") = 50);
  m.def("normalize", [](const std::string& s) { return normalize(s); });

  m.def(
      "canonical_config",
      [](const std::string& config_json) { return config_from(config_json).to_json().dump(); },
      py::arg("config_json"));

  m.def(
      "preview",
      [](const std::string& config_json, std::size_t count) {
        std::vector<SampleRecord> records;
        {
          py::gil_scoped_release release;
          records = preview(config_from(config_json), count);
        }
        py::list out;
        for (const SampleRecord& r : records) out.append(record_dict(r));
        return out;
      },
      py::arg("config_json"), py::arg("count") = 8);

  m.def(
      "generate",
      [](const std::string& config_json) {
        std::string manifest;
        {
          py::gil_scoped_release release;
          manifest = generate(config_from(config_json)).serialize();
        }
        return manifest;
      },
      py::arg("config_json"), "Runs a generation; returns the manifest JSON text.");

  m.def(
      "verify",
      [](const std::string& path) {
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = verify(path);
        }
        py::dict d;
        d["ok"] = r.ok();
        d["images"] = r.images;
        d["labels"] = r.labels;
        py::list failures;
        for (const VerifyFailure& f : r.failures) {
          failures.append(py::make_tuple(f.path, f.kind, f.message));
        }
        d["failures"] = failures;
        return d;
      },
      py::arg("path"));
}
