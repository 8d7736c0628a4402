# Copyright 2026 The IQA Toolkit Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Builds an iqa manifest from an unpacked TID2008 release.

Expected layout (as distributed):
  <root>/mos_with_names.txt      "<mos> <image name>" per line
  <root>/reference_images/I01.BMP ... I25.BMP
  <root>/distorted_images/i01_01_1.bmp ...  (iRR_DD_L: reference, type, level)

Usage:
  python3 tid2008_manifest.py --root /data/tid2008 --out tid2008.csv
"""

import argparse
import pathlib
import re

from manifest_common import find_case_insensitive, write_manifest

# Distortion types 1..17 in release order.
DISTORTIONS = [
    "awgn", "awgn_color", "spatial_corr_noise", "masked_noise", "hf_noise",
    "impulse_noise", "quantization_noise", "gblur", "denoising", "jpeg", "jp2k",
    "jpeg_trans_err", "jp2k_trans_err", "pattern_noise", "block_distortion",
    "mean_shift", "contrast_change",
]

NAME = re.compile(r"^i(\d\d)_(\d\d)_(\d)\.bmp$", re.IGNORECASE)


def rows(root, database):
    root = pathlib.Path(root)
    with open(root / "mos_with_names.txt", encoding="ascii") as f:
        for line_no, line in enumerate(f, 1):
            if not line.strip():
                continue
            mos, name = line.split()
            m = NAME.match(name)
            if m is None:
                raise ValueError(f"line {line_no}: unexpected image name {name!r}")
            ref = find_case_insensitive(root / "reference_images", f"I{m.group(1)}.BMP")
            test = find_case_insensitive(root / "distorted_images", name)
            yield ref, test, float(mos), "MOS", DISTORTIONS[int(m.group(2)) - 1], database


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--root", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--database", default="TID2008")
    args = p.parse_args()
    print(write_manifest(args.out, rows(args.root, args.database)))


if __name__ == "__main__":
    main()
