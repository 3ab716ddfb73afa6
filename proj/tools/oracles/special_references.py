#!/usr/bin/env python3
# Copyright 2026 The rglorot Authors
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
"""Writes tests/special_reference.inc: 50 probe points evaluated with mpmath at 50 digits."""

import sys
from pathlib import Path

import mpmath as mp

mp.mp.dps = 50

ERFC = [-3, -1, -0.1, 0, 0.5, 1, 2, 5, 10, 20]
ERFCX = [0.1, 1, 5, 10, 24.9, 25, 25.1, 50, 100, 1000]
LGAMMA = [0.1, 0.5, 1, 2.5, 10, 50, 99, 150.5, 1000, 5000]
Q = [(0.5, 0.1), (1, 2), (5, 3), (49.5, 50), (99, 100), (99, 1), (99, 150), (250, 240), (1000, 1050), (5000, 4900)]
P = [(0.5, 0.2), (1, 0.5), (3, 10), (49.5, 40), (49.5, 60), (99, 95), (200, 210), (1000, 900), (2500, 2600),
     (5000, 5100)]


def main(out):
    rows = []
    for x in ERFC:
        rows.append(("erfc", x, 0, mp.erfc(x)))
    for x in ERFCX:
        rows.append(("erfcx", x, 0, mp.exp(mp.mpf(x) ** 2) * mp.erfc(x)))
    for s in LGAMMA:
        rows.append(("log_gamma", s, 0, mp.loggamma(s)))
    for s, z in Q:
        rows.append(("upper_inc_gamma_reg", s, z, mp.gammainc(s, z, mp.inf, regularized=True)))
    for s, x in P:
        rows.append(("lower_inc_gamma_reg", s, x, mp.gammainc(s, 0, x, regularized=True)))
    lines = ["// Generated by tools/oracles/special_references.py (mpmath, 50 digits). Do not edit."]
    for name, a, b, v in rows:
        lines.append(f'{{"{name}", {float(a)!r}, {float(b)!r}, {mp.nstr(v, 25)}}},')
    Path(out).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/special_reference.inc")
