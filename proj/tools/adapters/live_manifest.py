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

"""Builds an iqa manifest from the LIVE release 2 database.

Expected layout (as distributed):
  <root>/dmos.mat           dmos (1x982) and orgs (1x982, 1 = reference copy)
  <root>/refnames_all.mat   refnames_all (1x982 cell of reference file names)
  <root>/refimgs/*.bmp
  <root>/jp2k, jpeg, wn, gblur, fastfading/img<k>.bmp

Scores are ordered jp2k (227), jpeg (233), wn, gblur, fastfading (174 each).
Rows flagged in orgs are undistorted copies of the reference and are left
out unless --keep-references is given. Reading the .mat files needs scipy.

Usage:
  python3 live_manifest.py --root /data/live2 --out live.csv
"""

import argparse
import pathlib

from manifest_common import find_case_insensitive, write_manifest

BLOCKS = [("jp2k", 227), ("jpeg", 233), ("wn", 174), ("gblur", 174), ("fastfading", 174)]


def rows(root, database, keep_references):
    from scipy.io import loadmat  # only this adapter needs scipy

    root = pathlib.Path(root)
    mat = loadmat(root / "dmos.mat")
    dmos = mat["dmos"].ravel()
    orgs = mat["orgs"].ravel()
    names = [str(c[0]) for c in loadmat(root / "refnames_all.mat")["refnames_all"].ravel()]
    if not len(dmos) == len(orgs) == len(names) == sum(n for _, n in BLOCKS):
        raise ValueError("unexpected score count in dmos.mat / refnames_all.mat")
    i = 0
    for directory, count in BLOCKS:
        for k in range(1, count + 1):
            if keep_references or not orgs[i]:
                ref = find_case_insensitive(root / "refimgs", names[i])
                test = find_case_insensitive(root / directory, f"img{k}.bmp")
                yield ref, test, float(dmos[i]), "DMOS", directory, database
            i += 1


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--root", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--database", default="LIVE")
    p.add_argument("--keep-references", action="store_true")
    args = p.parse_args()
    print(write_manifest(args.out, rows(args.root, args.database, args.keep_references)))


if __name__ == "__main__":
    main()
