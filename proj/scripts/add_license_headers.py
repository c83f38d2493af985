#!/usr/bin/env python3
"""Prepend the Apache-2.0 SPDX header to C++ sources that lack one."""

import pathlib
import sys

HEADER = """\
// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The riscust Authors
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

"""

SKIP = {"vendor", "build", "examples", ".git"}


def main(root: pathlib.Path) -> int:
    changed = 0
    for path in sorted(root.rglob("*")):
        if path.suffix not in {".hpp", ".cpp"} or SKIP.intersection(path.relative_to(root).parts):
            continue
        text = path.read_text()
        if "SPDX" in text:
            continue
        path.write_text(HEADER + text)
        changed += 1
        print(path.relative_to(root))
    print(f"{changed} file(s) updated", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main(pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".").resolve()))
