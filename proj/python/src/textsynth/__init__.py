# Copyright 2026 The textsynth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Python bindings for the textsynth synthetic OCR dataset generator."""

import json as _json

from ._textsynth import (
    ConfigError,
    Lcg,
    TextsynthError,
    __version__,
    normalize,
    segment,
    substream_for_sample,
)
from . import _textsynth as _native

__all__ = [
    "ConfigError",
    "Lcg",
    "TextsynthError",
    "__version__",
    "canonical_config",
    "generate",
    "normalize",
    "preview",
    "segment",
    "substream_for_sample",
    "verify",
]


def _dump(config):
    return config if isinstance(config, str) else _json.dumps(config)


def canonical_config(config):
    """Return the fully defaulted configuration document as a dict."""
    return _json.loads(_native.canonical_config(_dump(config)))


def preview(config, count=8):
    """Render the first ``count`` samples; each is a dict with ``png`` bytes."""
    return _native.preview(_dump(config), count)


def generate(config):
    """Write the dataset named by ``config["output"]["path"]``; return the manifest."""
    return _json.loads(_native.generate(_dump(config)))


def verify(path):
    return _native.verify(str(path))
