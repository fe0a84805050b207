"""Matplotlib figures written next to the JSON reports."""
from __future__ import annotations

from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from .cayley import PALETTE, cell_polygon, cells, removed_walls, staircase_label  # noqa: E402


def plot_vectors(h: Sequence[int], c: Sequence[int], path: str, title: str = "") -> str:
    fig, axes = plt.subplots(1, 2, figsize=(8, 3))
    for ax, vec, name in ((axes[0], h, "h (tiles per order)"), (axes[1], c, "c (critical per index)")):
        ax.bar(range(len(vec)), vec, color="#377eb8")
        ax.set_xticks(range(len(vec)))
        ax.set_title(name)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path


def plot_mixed_decomposition(n: int, path: str, alpha: Optional[Sequence] = None) -> str:
    corners = ((0.0, 0.0), (1.0, 0.0), (0.5, 0.866))

    def xy(p):
        return (sum(float(a) * v[0] for a, v in zip(p, corners)),
                sum(float(a) * v[1] for a, v in zip(p, corners)))

    fig, ax = plt.subplots(figsize=(5, 4.5))
    for k, cell in enumerate(cells(n, 2, alpha)):
        pts = [xy(p) for p in cell_polygon(cell)]
        ax.add_patch(Polygon(pts, closed=True, facecolor=PALETTE[k % len(PALETTE)], alpha=0.35))
        dashed = set(removed_walls(cell))
        for a in range(len(pts)):
            b = (a + 1) % len(pts)
            ax.plot([pts[a][0], pts[b][0]], [pts[a][1], pts[b][1]], color="black",
                    linestyle="--" if (a, b) in dashed else "-", linewidth=1)
        cx = sum(x for x, _ in pts) / len(pts)
        cy = sum(y for _, y in pts) / len(pts)
        ax.text(cx, cy, f"{k + 1}\n{staircase_label(cell.staircase)}", ha="center", va="center",
                fontsize=6)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path
