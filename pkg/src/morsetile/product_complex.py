"""Products of tiled complexes, the product with a tiled circle, and the
walk-weight formula for products of a sphere with circles."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from math import comb

from .core import (
    GradedVector,
    SimplicialComplex,
    build_complex,
    order_simplex,
    with_global_order,
)
from .errors import (
    ConditionHViolated,
    DimensionGuard,
    MorseTileError,
    NotHTiling,
    NotPure,
    NotTame,
)
from .product_simplex import (
    ProductTileSpec,
    enumerate_staircases,
    staircase_simplex,
    tile_product_shelling,
    vertex_pair,
)
from .tiles import MorseTile, make_tile
from .tilings import TiledSet, check_tameness, h_vector, is_h_tiling, is_pure

MAX_DIM = 8


def _require_tame(S: TiledSet, name: str):
    if S.complex.orientation is None and S.complex.dimension >= 1:
        raise NotTame(f"{name} carries no orientation", witness={"factor": name})
    if S.complex.dimension == 0:
        return
    try:
        check_tameness(S)
    except MorseTileError as exc:
        raise NotTame(f"{name} is not tame: {exc}",
                      witness={"factor": name, "cause": exc.to_json()}) from exc


def _local_spec(K1, T: MorseTile, K2, U: MorseTile):
    """Ordered vertices of both simplices and the standard-position spec."""
    a = order_simplex(K1, T.simplex) if len(T.simplex) > 1 else T.simplex
    b = order_simplex(K2, U.simplex) if len(U.simplex) > 1 else U.simplex
    parts = []
    for verts, tile in ((a, T), (b, U)):
        pos = {v: i for i, v in enumerate(verts)}
        J = frozenset(pos[v] for v in tile.removed)
        k = None
        if tile.morse_face is not None:
            mu = sorted(pos[v] for v in tile.morse_face)
            k = len(verts) - len(mu)
            if mu != list(range(k, len(verts))):
                raise NotTame("Morse face is not at the top of its simplex",
                              witness={"tile": tile.to_json(), "order": list(verts)})
        parts.append((J, k))
    (J1, k1), (J2, k2) = parts
    return a, b, ProductTileSpec(len(a) - 1, len(b) - 1, J1, J2, k1, k2)


@dataclass
class _ProductIndex:
    V1: tuple
    V2: tuple

    def __post_init__(self):
        self.p1 = {v: i for i, v in enumerate(self.V1)}
        self.p2 = {v: i for i, v in enumerate(self.V2)}

    def id(self, x, y) -> int:
        return self.p1[x] * len(self.V2) + self.p2[y]

    def labels(self) -> dict:
        return {self.id(x, y): (x, y) for x in self.V1 for y in self.V2}


def product_triangulation(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of K1 x K2 glued over pairs of maximal simplices.

    Vertex (x, y) has id pos(x) * |V2| + pos(y); ``labels`` records the pair.
    An edge points from the vertex that is smaller in both coordinates.
    """
    idx = _ProductIndex(K1.vertices, K2.vertices)
    simplices = set()
    for s1, s2 in cartesian(K1.maximal, K2.maximal):
        a = order_simplex(K1, s1) if len(s1) > 1 else s1
        b = order_simplex(K2, s2) if len(s2) > 1 else s2
        for I in enumerate_staircases(len(a) - 1, len(b) - 1):
            local = staircase_simplex(I)
            simplices.add(tuple(sorted(idx.id(a[j], b[i])
                                       for j, i in (vertex_pair(v, len(b) - 1) for v in local))))
    K = build_complex(simplices)
    lab = idx.labels()

    def leq(u, v, Kf):
        return u == v or Kf.points_to(u, v)

    orientation = []
    for p, q in K.edges:
        (x1, y1), (x2, y2) = lab[p], lab[q]
        if leq(x1, x2, K1) and leq(y1, y2, K2):
            orientation.append((p, q))
        elif leq(x2, x1, K1) and leq(y2, y1, K2):
            orientation.append((q, p))
        else:
            raise NotTame("product edge is not monotone in both factors",
                          witness={"edge": [lab[p], lab[q]]})
    used = {v: lab[v] for v in K.vertices}
    return SimplicialComplex(K.vertices, K.maximal, tuple(sorted(orientation)), used)


def product_tiling(S1: TiledSet, S2: TiledSet, h_tiling: bool = False,
                   max_dim: int = MAX_DIM) -> TiledSet:
    """Tiling of the triangulated product, tiles ordered by (k, l, staircase)."""
    if S1.complex.dimension + S2.complex.dimension > max_dim:
        raise DimensionGuard(f"product dimension exceeds {max_dim}")
    _require_tame(S1, "first factor")
    _require_tame(S2, "second factor")
    if h_tiling:
        for name, S in (("first factor", S1), ("second factor", S2)):
            if not is_h_tiling(S):
                raise NotHTiling(f"{name} uses Morse faces", witness={"factor": name})
    K = product_triangulation(S1.complex, S2.complex)
    idx = _ProductIndex(S1.complex.vertices, S2.complex.vertices)
    tiles = []
    for T in S1.tiles:
        for U in S2.tiles:
            a, b, spec = _local_spec(S1.complex, T, S2.complex, U)
            if h_tiling and not spec.condition_h():
                raise ConditionHViolated("pair violates the extreme-facet condition",
                                         witness={"tiles": [T.to_json(), U.to_json()],
                                                  "spec": spec.to_json()})
            local = tile_product_shelling(spec)
            m = spec.m

            def lift(v):
                j, i = vertex_pair(v, m)
                return idx.id(a[j], b[i])

            for t in local.tiles:
                tiles.append(t.relabel({v: lift(v) for v in t.simplex}))
    if h_tiling and not all(t.is_basic for t in tiles):
        raise NotHTiling("product produced a Morse face")
    return TiledSet(K, tuple(tiles), S1.is_shelling and S2.is_shelling)


def product_h_tiling(S1: TiledSet, S2: TiledSet, max_dim: int = MAX_DIM) -> TiledSet:
    return product_tiling(S1, S2, h_tiling=True, max_dim=max_dim)


def circle_tiling() -> TiledSet:
    """The boundary of a triangle tiled by three half-open edges.

    Each edge keeps one endpoint and points toward it; no order of the tiles
    is a shelling.
    """
    K = build_complex([(0, 1), (1, 2), (0, 2)], orientation=[(1, 0), (2, 1), (0, 2)])
    tiles = (make_tile((0, 1), (0,)), make_tile((1, 2), (1,)), make_tile((0, 2), (2,)))
    return TiledSet(K, tiles, False)


def shelled_boundary_simplex(n: int) -> TiledSet:
    """Boundary of the (n+1)-simplex shelled by facets V-{0}, V-{1}, ..."""
    V = tuple(range(n + 2))
    K = with_global_order(build_complex([tuple(v for v in V if v != k) for k in V]))
    tiles = tuple(make_tile([v for v in V if v != k], range(k)) for k in V)
    return TiledSet(K, tiles, True)


def delta2_formula(h: GradedVector) -> GradedVector:
    """h_j = j h_j(S) + (n+2-j) h_(j-1)(S) for S pure of dimension n."""
    n = len(h) - 2
    src = list(h.entries) + [0]
    out = [0] * (n + 3)
    for j in range(n + 3):
        out[j] = j * src[j] + ((n + 2 - j) * src[j - 1] if j >= 1 else 0)
    return GradedVector(tuple(out))


def _compare(measured: GradedVector, candidates: dict) -> dict:
    matches = [name for name, v in candidates.items() if v.entries == measured.entries]
    out = {name: v.tolist() for name, v in candidates.items()}
    out["measured"] = measured.tolist()
    out["matches"] = matches
    return out


def delta2_product(S: TiledSet, max_dim: int = MAX_DIM):
    """Product with the tiled circle; returns the tiling and a formula report."""
    if not is_pure(S):
        raise NotPure("input tiling is not pure dimensional")
    if not is_h_tiling(S):
        raise NotHTiling("input tiling uses Morse faces")
    C = circle_tiling()
    P = product_h_tiling(S, C, max_dim=max_dim)
    n = S.dimension
    census_ok = True
    per = len(C.tiles)
    pos = 0
    for T in S.tiles:
        for _ in range(per):
            block = P.tiles[pos:pos + n + 1]
            pos += n + 1
            orders = sorted(t.order for t in block)
            expect = sorted([T.order] * T.order + [T.order + 1] * (n + 1 - T.order))
            census_ok &= orders == expect
    h = h_vector(P)
    f = delta2_formula(h_vector(S))
    report = _compare(h, {"formula": f, "three_times_formula": f.scaled(3)})
    report["per_pair_census"] = census_ok
    return P, report


@dataclass(frozen=True)
class Walk:
    start: int
    values: tuple  # w(n), ..., w(n+m)

    @property
    def length(self) -> int:
        return len(self.values) - 1


def enumerate_walks(n: int, m: int, k: int) -> list[Walk]:
    """Walks of length m from any grade in [0..n+1] to k, steps 0 or +1."""
    out = []
    for a in range(0, n + 2):
        ups = k - a
        if not 0 <= ups <= m:
            continue
        for pos in _choose(m, ups):
            vals = [a]
            for step in range(m):
                vals.append(vals[-1] + (1 if step in pos else 0))
            out.append(Walk(a, tuple(vals)))
    return out


def _choose(m, r):
    from itertools import combinations

    return [set(c) for c in combinations(range(m), r)]


def walk_weight(w: Walk, n: int) -> int:
    """Product over steps into grade position i = n+1..n+m."""
    weight = 1
    for s in range(1, len(w.values)):
        i = n + s
        cur, prev = w.values[s], w.values[s - 1]
        weight *= cur if cur == prev else i + 1 - cur
    return weight


def h_from_walks(n: int, m: int) -> GradedVector:
    return GradedVector(tuple(sum(walk_weight(w, n) for w in enumerate_walks(n, m, k))
                              for k in range(n + m + 2)))


def h_walk_recursion(h: GradedVector, n: int, m: int) -> GradedVector:
    """One more circle factor: h'_k = k h_k + (n+m+2-k) h_(k-1)."""
    src = list(h.entries) + [0]
    return GradedVector(tuple(k * src[k] + ((n + m + 2 - k) * src[k - 1] if k else 0)
                              for k in range(len(src))))


def sphere_torus_tiling(n: int, m: int, max_dim: int = MAX_DIM):
    """Shelled boundary of the (n+1)-simplex times m tiled circles."""
    if m < 1 or n < 0:
        raise ValueError("need n >= 0 and m >= 1")
    if n + m > max_dim:
        raise DimensionGuard(f"dimension {n + m} exceeds {max_dim}")
    S = shelled_boundary_simplex(n)
    for _ in range(m):
        S, _report = delta2_product(S, max_dim=max_dim)
    h = h_vector(S)
    walks = h_from_walks(n, m)
    report = _compare(h, {"walks": walks, "scaled_walks": walks.scaled(3 ** m)})
    return S, report


def binom(a: int, b: int) -> int:
    return comb(a, b) if a >= 0 and 0 <= b else 0
