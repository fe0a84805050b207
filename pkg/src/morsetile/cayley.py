"""Mixed decompositions of the m-simplex obtained by slicing the staircase
triangulation along a fibre (the Cayley trick).

Everything is exact: points are tuples of Fractions summing to one.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterator, Optional, Sequence

from .errors import UnsupportedDimension
from .staircases import Staircase, enumerate_staircases


def as_point(coords: Sequence) -> tuple:
    p = tuple(Fraction(c) for c in coords)
    if sum(p) != 1 or any(c < 0 for c in p):
        raise ValueError(f"{p} is not a point of the simplex")
    return p


def uniform_weights(n: int) -> tuple:
    return tuple(Fraction(1, n + 1) for _ in range(n + 1))


def parse_weights(text: str) -> tuple:
    """'1/3,1/3,1/3' -> Fractions; must be positive and sum to one."""
    alpha = tuple(Fraction(part.strip()) for part in text.split(","))
    check_weights(alpha)
    return alpha


def check_weights(alpha: Sequence[Fraction]):
    if any(a <= 0 for a in alpha) or sum(alpha) != 1:
        raise ValueError("weights must be positive and sum to one")


@dataclass(frozen=True)
class MixedCell:
    staircase: Staircase
    alpha: tuple

    def __post_init__(self):
        alpha = tuple(Fraction(a) for a in self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if len(alpha) != self.staircase.n + 1:
            raise ValueError("one weight per interval is required")
        check_weights(alpha)

    @property
    def levels(self) -> tuple:
        return tuple(accumulate(self.alpha))


def _prefix(p) -> list:
    return [Fraction(0)] + list(accumulate(p))


def cell_contains(cell: MixedCell, p: Sequence) -> bool:
    I = cell.staircase
    if len(p) != I.m + 1:
        raise ValueError("dimension mismatch")
    pre = _prefix(p)
    return all(pre[e] <= A <= pre[e + 1] for e, A in zip(I.e, cell.levels))


def piece_contains(cell: MixedCell, p: Sequence) -> bool:
    if not cell_contains(cell, p):
        return False
    I = cell.staircase
    pre = _prefix(p)
    return all(pre[I.e[j]] < A for j, A in enumerate(cell.levels[:-1]) if I.size(j) > 1)


def decompose(cell: MixedCell, p: Sequence) -> list[dict]:
    """Points x_j of the intervals with p = sum alpha_j x_j (p in the cell)."""
    I, alpha = cell.staircase, cell.alpha
    parts = []
    for j in range(I.n + 1):
        e = I.e[j]
        x = {}
        for i in range(I.b[j], e):
            x[i] = (Fraction(p[i]) - sum(alpha[l] * parts[l].get(i, 0) for l in range(j))) / alpha[j]
        x[e] = 1 - sum(x.values())
        parts.append(x)
    return parts


@dataclass(frozen=True)
class MixedFace:
    """The face sum alpha_j Delta_(K_j); empty as soon as one K_j is."""

    intervals: tuple
    alpha: tuple

    @property
    def is_empty(self) -> bool:
        return any(not K for K in self.intervals)

    @property
    def dimension(self) -> int:
        return -1 if self.is_empty else sum(len(K) - 1 for K in self.intervals)


def cell_intersection(c1: MixedCell, c2: MixedCell) -> MixedFace:
    if c1.alpha != c2.alpha or (c1.staircase.n, c1.staircase.m) != (c2.staircase.n, c2.staircase.m):
        raise ValueError("cells of different decompositions")
    ivs = tuple(tuple(sorted(set(a) & set(b)))
                for a, b in zip(c1.staircase.intervals, c2.staircase.intervals))
    return MixedFace(ivs, c1.alpha)


def face_contains(face: MixedFace, cell: MixedCell, p: Sequence) -> bool:
    """Whether ``p`` lies in ``face``, a face of ``cell``."""
    if face.is_empty or not cell_contains(cell, p):
        return False
    for K, x in zip(face.intervals, decompose(cell, p)):
        if any(v != 0 and i not in K for i, v in x.items()):
            return False
    return True


def grid_points(m: int, d: int) -> Iterator[tuple]:
    """All points of the m-simplex with coordinates in (1/d)Z."""
    def rec(k, left):
        if k == m:
            yield (left,)
            return
        for a in range(left + 1):
            for rest in rec(k + 1, left - a):
                yield (a,) + rest

    for c in rec(0, d):
        yield tuple(Fraction(a, d) for a in c)


def cells(n: int, m: int, alpha: Optional[Sequence] = None) -> list[MixedCell]:
    alpha = uniform_weights(n) if alpha is None else tuple(alpha)
    return [MixedCell(I, alpha) for I in enumerate_staircases(n, m)]


@dataclass
class SweepResult:
    points: int
    covered: bool
    pieces_partition: bool
    disjoint_interiors: bool
    filtration: bool
    witness: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.covered and self.pieces_partition and self.disjoint_interiors and self.filtration


def sweep(n: int, m: int, d: int, alpha: Optional[Sequence] = None) -> SweepResult:
    """Check covering, partition, disjoint interiors and filtration on a grid."""
    cs = cells(n, m, alpha)
    res = SweepResult(0, True, True, True, True)
    faces = {}
    for p in grid_points(m, d):
        res.points += 1
        inside = [k for k, c in enumerate(cs) if cell_contains(c, p)]
        pieces = [k for k, c in enumerate(cs) if piece_contains(c, p)]
        if not inside:
            res.covered = False
            res.witness = res.witness or {"uncovered": [str(x) for x in p]}
        if len(pieces) != 1:
            res.pieces_partition = False
            res.witness = res.witness or {"pieces": pieces, "point": [str(x) for x in p]}
        elif inside and pieces[0] != inside[0]:
            res.filtration = False
            res.witness = res.witness or {"first_cell": inside[0], "piece": pieces[0]}
        for a in range(len(inside)):
            for b in range(a + 1, len(inside)):
                key = (inside[a], inside[b])
                if key not in faces:
                    faces[key] = cell_intersection(cs[key[0]], cs[key[1]])
                F = faces[key]
                if not (F.dimension < m and face_contains(F, cs[key[0]], p)
                        and face_contains(F, cs[key[1]], p)):
                    res.disjoint_interiors = False
                    res.witness = res.witness or {"cells": list(key), "point": [str(x) for x in p]}
    return res


def cell_vertices(cell: MixedCell) -> list[tuple]:
    """Vertices of the cell: sums alpha_j e_(i_j) over choices i_j in I_j."""
    I = cell.staircase
    pts = {tuple([Fraction(0)] * (I.m + 1))}
    for j in range(I.n + 1):
        nxt = set()
        for q in pts:
            for i in I.interval(j):
                r = list(q)
                r[i] += cell.alpha[j]
                nxt.add(tuple(r))
        pts = nxt
    return sorted(pts)


def _hull(points: list[tuple]) -> list[tuple]:
    """Convex hull (counter-clockwise) of exact 2-d points."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def cell_polygon(cell: MixedCell) -> list[tuple]:
    """Barycentric vertices of a planar cell in counter-clockwise order."""
    if cell.staircase.m != 2:
        raise UnsupportedDimension("polygons are only drawn for the triangle")
    chart = {(p[1], p[2]): p for p in cell_vertices(cell)}
    return [chart[q] for q in _hull(list(chart))]


def removed_walls(cell: MixedCell) -> list[tuple]:
    """Polygon edges (index pairs) that belong to the cell but not its piece."""
    poly = cell_polygon(cell)
    out = []
    for k in range(len(poly)):
        a, b = poly[k], poly[(k + 1) % len(poly)]
        mid = tuple((x + y) / 2 for x, y in zip(a, b))
        if not piece_contains(cell, mid):
            out.append((k, (k + 1) % len(poly)))
    return out


# fixed layout: triangle corners in SVG user units
SVG_WIDTH, SVG_HEIGHT = 400, 360
CORNERS = ((20.0, 340.0), (380.0, 340.0), (200.0, 28.23))
PALETTE = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
           "#f781bf", "#999999", "#66c2a5", "#fc8d62")


def to_screen(p: Sequence) -> tuple:
    x = sum(float(c) * v[0] for c, v in zip(p, CORNERS))
    y = sum(float(c) * v[1] for c, v in zip(p, CORNERS))
    return round(x, 2), round(y, 2)


def staircase_label(I: Staircase) -> str:
    return "(" + ",".join("{" + ",".join(map(str, iv)) + "}" for iv in I.intervals) + ")"


def export_svg(n: int, m: int = 2, alpha: Optional[Sequence] = None) -> str:
    if m != 2:
        raise UnsupportedDimension(f"SVG export needs m = 2, got {m}")
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" '
             f'viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">']
    for k, cell in enumerate(cells(n, m, alpha)):
        poly = cell_polygon(cell)
        scr = [to_screen(p) for p in poly]
        colour = PALETTE[k % len(PALETTE)]
        pts = " ".join(f"{x},{y}" for x, y in scr)
        label = staircase_label(cell.staircase)
        lines.append(f'  <g id="cell-{k + 1}">')
        lines.append(f'    <polygon points="{pts}" fill="{colour}" fill-opacity="0.35" stroke="none"/>')
        dashed = set(removed_walls(cell))
        for a in range(len(scr)):
            b = (a + 1) % len(scr)
            style = ' stroke-dasharray="4,3"' if (a, b) in dashed else ""
            (x1, y1), (x2, y2) = scr[a], scr[b]
            lines.append(f'    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" '
                         f'stroke-width="1.5"{style}/>')
        cx = round(sum(x for x, _ in scr) / len(scr), 2)
        cy = round(sum(y for _, y in scr) / len(scr), 2)
        lines.append(f'    <text x="{cx}" y="{cy}" font-size="8" text-anchor="middle">'
                     f'{k + 1}: {label}</text>')
        lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
