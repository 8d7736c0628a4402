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

"""Shared manifest writer for the database adapters."""

import csv
import pathlib

HEADER = ["ref_path", "test_path", "subjective", "subjective_kind", "distortion", "database"]


def write_manifest(out_path, rows):
    """Writes rows of (ref, test, subjective, kind, distortion, database).

    Paths are written relative to the manifest's directory when possible so
    the manifest stays valid if the tree is moved together.
    """
    out_path = pathlib.Path(out_path).resolve()
    base = out_path.parent
    with open(out_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n", quoting=csv.QUOTE_NONE)
        writer.writerow(HEADER)
        for ref, test, subjective, kind, distortion, database in rows:
            cells = [_rel(ref, base), _rel(test, base), repr(float(subjective)), kind,
                     distortion, database]
            if any("," in c for c in cells):
                raise ValueError(f"comma in manifest field: {cells}")
            writer.writerow(cells)
    return out_path


def _rel(path, base):
    path = pathlib.Path(path).resolve()
    try:
        return path.relative_to(base).as_posix()
    except ValueError:
        return path.as_posix()


def find_case_insensitive(directory, name):
    """Returns directory/name, matching the file name case-insensitively."""
    directory = pathlib.Path(directory)
    exact = directory / name
    if exact.exists():
        return exact
    lowered = name.lower()
    for candidate in directory.iterdir():
        if candidate.name.lower() == lowered:
            return candidate
    raise FileNotFoundError(f"{name} not found in {directory}")
