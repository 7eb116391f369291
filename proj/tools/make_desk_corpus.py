#!/usr/bin/env python3
# Copyright 2026 The pjpeg Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates tests/data/corpus from the photos bundled with scikit-image.

Each photo is center-cropped to a square and resampled to 512x512 with a
Lanczos filter, then stored as an 8-bit RGB PNG.
"""

import os
import sys

import skimage
from PIL import Image

SOURCES = [
    "astronaut.png",
    "chelsea.png",
    "coffee.png",
    "hubble_deep_field.jpg",
    "ihc.png",
    "motorcycle_left.png",
    "retina.jpg",
    "rocket.jpg",
]
SIZE = 512


def main(out_dir):
  data_dir = os.path.join(os.path.dirname(skimage.__file__), "data")
  os.makedirs(out_dir, exist_ok=True)
  for name in SOURCES:
    im = Image.open(os.path.join(data_dir, name)).convert("RGB")
    side = min(im.size)
    left = (im.size[0] - side) // 2
    top = (im.size[1] - side) // 2
    im = im.crop((left, top, left + side, top + side))
    im = im.resize((SIZE, SIZE), Image.LANCZOS)
    stem = os.path.splitext(name)[0]
    im.save(os.path.join(out_dir, stem + ".png"))


if __name__ == "__main__":
  main(sys.argv[1] if len(sys.argv) > 1 else
       os.path.join(os.path.dirname(__file__), "..", "tests", "data", "corpus"))
