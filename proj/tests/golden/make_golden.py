#!/usr/bin/env python3
# Copyright 2026 The evochain Authors.
# SPDX-License-Identifier: Apache-2.0
"""Independent reference for phenotype development and SVG serialization.

Regenerates the golden SVG files from genomes.json. This is a separate implementation
of the development rules, used only to freeze expected bytes for the C++ test suite.
Usage: python3 make_golden.py  (writes NN.svg next to this script)
"""
import json
import math
from fractions import Fraction
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def develop(genome):
    g = genome["shape"]
    dx = [0, g[0], g[1], g[2], 0, -g[2], -g[1], -g[0]]
    dy = [-g[3], -g[4], -g[5], g[6], g[7], g[6], -g[5], -g[4]]
    total = genome["depth"]
    thickness = genome["thickness"]
    color = tuple(genome["color"])
    out = []
    # explicit stack, pushing the plus-direction child first so minus pops first
    stack = [(0, 0, 0, total)]
    while stack:
        x, y, direction, depth = stack.pop()
        d = direction % 8
        x2, y2 = x + depth * dx[d], y + depth * dy[d]
        width = math.ceil(thickness * depth / total)
        out.append((x, y, x2, y2, width, color))
        if depth > 1:
            stack.append((x2, y2, direction + 1, depth - 1))
            stack.append((x2, y2, direction - 1, depth - 1))
    return out


def render(segments):
    xs = [v for s in segments for v in (s[0], s[2])]
    ys = [v for s in segments for v in (s[1], s[3])]
    w, h = max(xs) - min(xs), max(ys) - min(ys)
    margin = max(1, math.ceil(Fraction(5, 100) * max(w, h)))
    lines = ['<svg xmlns="http://www.w3.org/2000/svg" viewBox="%d %d %d %d">'
             % (min(xs) - margin, min(ys) - margin, w + 2 * margin, h + 2 * margin)]
    for x1, y1, x2, y2, width, (r, g, b) in segments:
        lines.append('<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="rgb(%d,%d,%d)" '
                     'stroke-width="%d" stroke-linecap="round"/>' % (x1, y1, x2, y2, r, g, b, width))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def main():
    with open(os.path.join(HERE, "genomes.json")) as f:
        genomes = json.load(f)
    for i, genome in enumerate(genomes):
        with open(os.path.join(HERE, "%02d.svg" % i), "w", newline="\n") as f:
            f.write(render(develop(genome)))


if __name__ == "__main__":
    main()
