"""Report rendering: CSV summaries plus matplotlib figures.

`write_report` drives a small acceptance-style run and leaves behind
`summary.csv`, `hochschild.csv`, a drawing of the golden tiling patterns
and a chart of the Hochschild dimensions.
"""

from __future__ import annotations

import csv
import os
from typing import Dict, List, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.patches import Polygon

from .algebra import F2, Z, parse_basic
from .golden import golden_checks
from .hochschild import homology
from .tiling import BOUND, TilingPattern, enumerate_patterns

SIDE_STEP = {0: (1, 0), 1: (0, 1), 2: (-1, 0), 3: (0, -1)}  # E N W S


def _layout(pattern: TilingPattern) -> Dict[int, Tuple[float, float]]:
    """BFS coordinates; wrapped squares may overlap and are inset later."""
    coords = {0: (0.0, 0.0)}
    queue = [0]
    while queue:
        v = queue.pop(0)
        x, y = coords[v]
        for side in range(4):
            t = pattern.nbr[v][side]
            if t != BOUND and t not in coords:
                dx, dy = SIDE_STEP[side]
                coords[t] = (x + dx, y + dy)
                queue.append(t)
    return coords


def draw_pattern(ax, pattern: TilingPattern, title: str) -> None:
    coords = _layout(pattern)
    seen: Dict[Tuple[float, float], int] = {}
    for v, (x, y) in coords.items():
        inset = 0.06 * seen.get((x, y), 0)
        seen[(x, y)] = seen.get((x, y), 0) + 1
        square = Polygon([(x + inset, y + inset), (x + 1 - inset, y + inset),
                          (x + 1 - inset, y + 1 - inset),
                          (x + inset, y + 1 - inset)],
                         closed=True, fill=False, linewidth=1.2)
        ax.add_patch(square)
        ax.text(x + 0.5, y + 0.5, str(v), ha="center", va="center",
                fontsize=8)
    rx, ry = coords[0]
    dx, dy = SIDE_STEP[pattern.root_side]
    ax.plot([rx + 0.5 + 0.5 * dx], [ry + 0.5 + 0.5 * dy], "ko", markersize=5)
    ax.set_title(title, fontsize=9)
    ax.set_aspect("equal")
    ax.autoscale()
    ax.margins(0.2)
    ax.axis("off")


GOLDEN_PATTERNS = [
    ("mu_4(r4,r3,r2,r1)", "r4,r3,r2,r1", 0),
    ("mu_4(r34,r3,r2,r1)", "r34,r3,r2,r1", 0),
    ("mu_6(r3412,r1,r4,r34,r3,r2)", "r3412,r1,r4,r34,r3,r2", 0),
    ("mu_8^1 (2x2 block)", "r41,r4,r34,r3,r23,r2,r12,r1", 1),
]

HH_TABLE = [
    ("assoc", (4, -1), 10), ("assoc", (5, -2), 10), ("assoc", (5, -1), 10),
    ("assoc", (6, -2), 11), ("weighted", (1, -1), 16),
    ("weighted", (2, -1), 16), ("weighted", (1, -2), 16),
]


def write_report(out_dir: str) -> List[str]:
    os.makedirs(out_dir, exist_ok=True)
    paths = []

    summary_path = os.path.join(out_dir, "summary.csv")
    with open(summary_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["check", "status", "detail"])
        for name, passed, detail in golden_checks():
            writer.writerow([name, "pass" if passed else "fail", detail])
    paths.append(summary_path)

    hh_path = os.path.join(out_dir, "hochschild.csv")
    hh_rows = []
    with open(hh_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["model", "bigrading", "ring", "group"])
        for model, bigrading, cutoff in HH_TABLE:
            for ring in (F2, Z):
                result = homology(model, bigrading, ring, cutoff)
                writer.writerow([model, "%d,%d" % bigrading, ring,
                                 result.group_name()])
                if ring == F2:
                    hh_rows.append((model, bigrading, result.dimension))
    paths.append(hh_path)

    fig, axes = plt.subplots(1, len(GOLDEN_PATTERNS), figsize=(12, 3.2))
    for ax, (title, inputs, weight) in zip(axes, GOLDEN_PATTERNS):
        seq = tuple(parse_basic(t) for t in inputs.split(","))
        patterns = enumerate_patterns(seq, weight)
        if patterns:
            draw_pattern(ax, patterns[0], title)
        else:
            ax.set_title(title + " (none)")
            ax.axis("off")
    fig.tight_layout()
    tiling_path = os.path.join(out_dir, "tiling_patterns.png")
    fig.savefig(tiling_path, dpi=150)
    plt.close(fig)
    paths.append(tiling_path)

    fig, ax = plt.subplots(figsize=(6, 3.2))
    labels = ["%s %s" % (model, bigrading) for model, bigrading, _ in hh_rows]
    dims = [dim for _, _, dim in hh_rows]
    ax.bar(range(len(dims)), dims)
    ax.set_xticks(range(len(dims)))
    ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=7)
    ax.set_ylabel("dim over F2")
    ax.set_title("Hochschild cohomology dimensions")
    fig.tight_layout()
    hh_fig_path = os.path.join(out_dir, "hochschild_dims.png")
    fig.savefig(hh_fig_path, dpi=150)
    plt.close(fig)
    paths.append(hh_fig_path)

    return paths
