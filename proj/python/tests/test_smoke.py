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


import hashlib
import io
import os
from pathlib import Path

import pytest
from PIL import Image

import textsynth

DATA = Path(os.environ.get("TEXTSYNTH_DATA", Path(__file__).resolve().parents[2] / "tests" / "data"))
FONT = str(DATA / "fonts" / "DejaVuSans.ttf")
CORPUS = str(DATA / "kashmiri_sample.txt")


def config(**overrides):
    cfg = {"corpus": {"path": CORPUS}, "fonts": [{"path": FONT}], "count": 40, "seed": 7}
    cfg.update(overrides)
    return cfg


def test_lcg_first_draw():
    rng = textsynth.Lcg(42)
    assert rng.next_state() == (1103515245 * 42 + 12345) % 2**31


def test_segment_words():
    assert textsynth.segment("a bb  ccc", "word") == ["a", "bb", "ccc"]


def test_preview_images_decode():
    records = textsynth.preview(config(), 3)
    assert len(records) == 3
    for r in records:
        img = Image.open(io.BytesIO(r["png"]))
        assert img.size == (256, 64)
        assert r["label"]


def test_preview_is_prefix_of_dataset(tmp_path):
    out = tmp_path / "files"
    textsynth.generate(config(output={"storage": "files", "path": str(out)}))
    for r in textsynth.preview(config(), 4):
        on_disk = (out / "images" / f"image_{r['index']:06d}.png").read_bytes()
        assert hashlib.sha256(on_disk).digest() == hashlib.sha256(r["png"]).digest()


def test_generate_and_verify(tmp_path):
    target = tmp_path / "ds.zip"
    manifest = textsynth.generate(config(output={"path": str(target)}))
    assert manifest["master_seed"] == 7
    assert manifest["counts"]["total"] == 40
    report = textsynth.verify(target)
    assert report["ok"], report["failures"]


def test_config_error_carries_field_paths():
    bad = config(fonts=[{"path": FONT, "percentage": 60}, {"path": FONT, "percentage": 50}])
    with pytest.raises(textsynth.ConfigError) as info:
        textsynth.preview(bad, 1)
    assert ("fonts[].percentage", "percentages sum to 110, expected 100") in info.value.issues
