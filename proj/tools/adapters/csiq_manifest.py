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

"""Builds an iqa manifest from an unpacked CSIQ release.

CSIQ ships its scores as csiq.DMOS.xlsx. Export the per-image sheet to CSV
first; the adapter needs its columns image, dst_type, dst_lev and dmos.

Expected layout:
  <root>/src_imgs/<image>.png
  <root>/dst_imgs/<type dir>/<image>.<TYPE>.<level>.png

File-name case varies between types (1600.AWGN.1.png, 1600.jpeg2000.1.png);
matching is case-insensitive.

Usage:
  python3 csiq_manifest.py --root /data/csiq --scores dmos.csv --out csiq.csv
"""

import argparse
import csv
import pathlib

from manifest_common import find_case_insensitive, write_manifest

# dst_type value in the score sheet -> (directory, file-name tag, label).
TYPES = {
    "noise": ("awgn", "AWGN", "awgn"),
    "jpeg": ("jpeg", "JPEG", "jpeg"),
    "jpeg 2000": ("jpeg2000", "jpeg2000", "jp2k"),
    "fnoise": ("fnoise", "fnoise", "pink_noise"),
    "blur": ("blur", "BLUR", "gblur"),
    "contrast": ("contrast", "contrast", "contrast"),
}


def rows(root, scores, database):
    root = pathlib.Path(root)
    with open(scores, newline="", encoding="utf-8-sig") as f:
        for rec in csv.DictReader(f):
            image = str(rec["image"]).strip()
            if image.endswith(".0"):  # spreadsheet exports of numeric names
                image = image[:-2]
            directory, tag, label = TYPES[rec["dst_type"].strip().lower()]
            level = int(float(rec["dst_lev"]))
            ref = find_case_insensitive(root / "src_imgs", f"{image}.png")
            test = find_case_insensitive(root / "dst_imgs" / directory,
                                         f"{image}.{tag}.{level}.png")
            yield ref, test, float(rec["dmos"]), "DMOS", label, database


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--root", required=True)
    p.add_argument("--scores", required=True, help="per-image DMOS sheet exported as CSV")
    p.add_argument("--out", required=True)
    p.add_argument("--database", default="CSIQ")
    args = p.parse_args()
    print(write_manifest(args.out, rows(args.root, args.scores, args.database)))


if __name__ == "__main__":
    main()
