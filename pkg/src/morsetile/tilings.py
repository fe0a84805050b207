"""Tiled sets and the independent verifier for tilings and shellings.

The verifier works on open faces only: a tiled set is the union of the face
sets of its tiles, and "closed" always means closed relative to that union.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Optional, Sequence

from .core import (
    GradedVector,
    SimplicialComplex,
    build_complex,
    complex_from_json,
    complex_to_json,
    cyclic_triangles,
    order_simplex,
    simplex_faces,
)
from .errors import (
    ClosureWitness,
    InvalidOrientation,
    MorseFaceOrderWitness,
    MorseTileError,
    NotTame,
    OrientedTriangleCycle,
    OverlapWitness,
    PrefixNotClosed,
    TileOutsideComplex,
)
from .tiles import MorseTile, face_set, signature, tile_from_json


@dataclass(frozen=True)
class TiledSet:
    complex: SimplicialComplex
    tiles: tuple
    is_shelling: bool = False
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def dimension(self) -> int:
        return max(t.dimension for t in self.tiles)

    def faces(self) -> frozenset:
        out = set()
        for t in self.tiles:
            out.update(face_set(t))
        return frozenset(out)

    def to_json(self) -> dict:
        return {"complex": complex_to_json(self.complex),
                "tiles": [t.to_json() for t in self.tiles],
                "is_shelling": self.is_shelling}


def tiled_set_from_json(data: dict) -> TiledSet:
    return TiledSet(complex_from_json(data["complex"]),
                    tuple(tile_from_json(t) for t in data["tiles"]),
                    bool(data.get("is_shelling", False)))


def _owners(S: TiledSet) -> dict:
    owner = {}
    for i, t in enumerate(S.tiles):
        if t.simplex not in S.complex.faces:
            raise TileOutsideComplex(f"tile {i} lies on {t.simplex}, not a simplex of the complex",
                                     witness={"tile": i, "simplex": list(t.simplex)})
        for f in face_set(t):
            j = owner.setdefault(f, i)
            if j != i:
                raise OverlapWitness(f"face {f} lies in tiles {j} and {i}",
                                     witness={"face": list(f), "tiles": [j, i]})
    return owner


def verify_tiling(S: TiledSet) -> dict:
    """Check that the tiles partition their union and that the union of
    tiles of dimension >= j is closed for every j.  Raises on failure."""
    owner = _owners(S)
    dims = [t.dimension for t in S.tiles]
    for f, i in owner.items():
        for g in simplex_faces(f, proper=True):
            j = owner.get(g)
            if j is not None and dims[j] < dims[i]:
                raise ClosureWitness(
                    f"union of tiles of dimension >= {dims[i]} misses face {g} of {f}",
                    witness={"j": dims[i], "face": list(g), "of": list(f), "tile": i})
    return {"valid_partition": True, "valid_closure": True}


def verify_shelling(S: TiledSet) -> dict:
    """Check that every prefix union of tiles is closed.  Raises on failure."""
    owner = _owners(S)
    for i, t in enumerate(S.tiles):
        for f in face_set(t):
            for g in simplex_faces(f, proper=True):
                j = owner.get(g)
                if j is not None and j > i:
                    raise PrefixNotClosed(
                        f"prefix of length {i + 1} is not closed: misses {g}",
                        witness={"i": i + 1, "face": list(g), "of": list(f), "owner": j})
    return {"valid_shelling": True}


def check_tameness(S: TiledSet, orientation: Optional[SimplicialComplex] = None) -> dict:
    """Check the order and tameness conditions for the given orientation.

    ``orientation`` is a complex carrying the orientation; defaults to the
    complex of ``S``.
    """
    K = orientation if orientation is not None else S.complex
    if K.orientation is None:
        raise InvalidOrientation("no orientation supplied")
    if K.dimension >= 2:
        bad = cyclic_triangles(K)
        if bad:
            raise OrientedTriangleCycle(f"triangle {bad[0]} is cyclically oriented",
                                        witness=list(bad[0]))
    for i, t in enumerate(S.tiles):
        if t.morse_face is None:
            continue
        mu = set(t.morse_face)
        for a in t.simplex:
            if a in mu:
                continue
            for b in mu:
                if not K.points_to(a, b):
                    raise MorseFaceOrderWitness(
                        f"edge ({b}, {a}) of tile {i} points away from its Morse face",
                        witness={"tile": i, "edge": [b, a]})
    return {"tame": True}


def proptame_orientation(S: TiledSet) -> SimplicialComplex:
    """Orientation putting all Morse-face vertices after all other vertices.

    Certifies tameness when every pair of tiles with Morse faces satisfies
    sigma & mu' == sigma' & mu; raises NotTame otherwise.
    """
    morse = [t for t in S.tiles if t.morse_face is not None]
    for t in morse:
        for u in morse:
            if set(t.simplex) & set(u.morse_face) != set(u.simplex) & set(t.morse_face):
                raise NotTame("Morse faces are not separable",
                              witness={"tiles": [t.to_json(), u.to_json()]})
    L = sorted({v for t in morse for v in t.morse_face})
    order = [v for v in S.complex.vertices if v not in set(L)] + L
    rank = {v: i for i, v in enumerate(order)}
    edges = [(a, b) if rank[a] < rank[b] else (b, a) for a, b in S.complex.edges]
    return S.complex.with_orientation(edges)


def h_vector(S: TiledSet) -> GradedVector:
    n = S.dimension
    h = [0] * (n + 2)
    for t in S.tiles:
        h[t.order] += 1
    return GradedVector(tuple(h))


def c_vector(S: TiledSet) -> GradedVector:
    n = S.dimension
    c = [0] * (n + 1)
    for t in S.tiles:
        sig = signature(t)
        if sig.is_critical:
            c[sig.index] += 1
    return GradedVector(tuple(c))


def critical_census(S: TiledSet) -> list[dict]:
    counts = Counter(signature(t).index for t in S.tiles if signature(t).is_critical)
    return [{"index": k, "count": counts[k]} for k in sorted(counts)]


def is_pure(S: TiledSet) -> bool:
    return len({t.dimension for t in S.tiles}) == 1


def is_h_tiling(S: TiledSet) -> bool:
    return all(t.is_basic for t in S.tiles)


def alternating_face_count(S: TiledSet) -> int:
    return sum((-1) ** (len(f) - 1) for f in S.faces())


def even_dehn_sommerville(h: Sequence[int]) -> bool:
    """h_i - h_(n+1-i) == (-1)^i C(n+1, i) (h_0 - h_(n+1)) for all i."""
    d = len(h) - 1
    return all(h[i] - h[d - i] == (-1) ** i * comb(d, i) * (h[0] - h[d]) for i in range(d + 1))


@dataclass
class TilingReport:
    valid_partition: bool
    valid_closure: bool
    valid_shelling: bool
    declared_shelling: bool
    tame: Optional[bool]
    pure: bool
    h: list
    c: list
    euler: int
    euler_identity: bool
    palindromic_h: bool
    palindromic_c: bool
    critical_tiles: list
    dehn_sommerville_even_relation: Optional[bool] = None
    morse_vector_equivalence: Optional[bool] = None
    witnesses: dict = field(default_factory=dict)
    formula_comparison: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return (self.valid_partition and self.valid_closure and self.euler_identity
                and (self.valid_shelling or not self.declared_shelling) and self.tame is not False)

    def to_json(self) -> dict:
        out = asdict(self)
        if out["formula_comparison"] is None:
            del out["formula_comparison"]
        return out


def _attempt(fn, *args):
    try:
        fn(*args)
        return True, None
    except MorseTileError as exc:
        return False, exc.to_json()


def analyze(S: TiledSet, closed_manifold_hint: bool = False) -> TilingReport:
    """Verify ``S`` and compute its vectors.

    The list order is always tested as a shelling order; a failure only makes
    the report fail when ``S`` claims to be a shelling.
    """
    witnesses = {}
    tiling_ok, w = _attempt(verify_tiling, S)
    if w:
        witnesses["tiling"] = w
    partition_ok = tiling_ok or (w["error"] == "ClosureWitness")
    closure_ok = tiling_ok

    shelling_ok, w = _attempt(verify_shelling, S)
    if w:
        witnesses["shelling"] = w

    tame = None
    if S.complex.orientation is not None:
        tame, w = _attempt(check_tameness, S)
        if w:
            witnesses["tameness"] = w
    else:
        try:
            tame, _ = _attempt(check_tameness, S, proptame_orientation(S))
        except NotTame:
            tame = None

    h, c = h_vector(S), c_vector(S)
    euler = alternating_face_count(S)
    identity = euler == sum((-1) ** k * ck for k, ck in enumerate(c))
    report = TilingReport(
        valid_partition=partition_ok, valid_closure=closure_ok, valid_shelling=shelling_ok,
        declared_shelling=S.is_shelling, tame=tame, pure=is_pure(S), h=h.tolist(), c=c.tolist(), euler=euler,
        euler_identity=identity, palindromic_h=h.is_palindromic(),
        palindromic_c=c.is_palindromic(), critical_tiles=critical_census(S),
        witnesses=witnesses)
    n = S.dimension
    if closed_manifold_hint and is_h_tiling(S) and n % 2 == 0:
        report.dehn_sommerville_even_relation = even_dehn_sommerville(h.entries)
    if closed_manifold_hint and n <= 3:
        same = c[0] == c[n]
        report.morse_vector_equivalence = same == c.is_palindromic() == h.is_palindromic()
    return report


def tiling_from_order(K: SimplicialComplex, simplices: Sequence[Sequence[int]]) -> TiledSet:
    """Classical shelling: tile each listed simplex by the faces not seen before.

    The result is returned whatever it is; verification is left to the caller.
    """
    from .tiles import recognize_tile

    seen = set()
    tiles = []
    for s in simplices:
        fresh = {f for f in simplex_faces(tuple(sorted(s))) if f not in seen}
        tiles.append(recognize_tile(fresh))
        seen |= fresh
    return TiledSet(K, tuple(tiles), True)


def ordered_tile(K: SimplicialComplex, t: MorseTile) -> tuple:
    return order_simplex(K, t.simplex)


__all__ = [
    "TiledSet", "TilingReport", "analyze", "verify_tiling", "verify_shelling", "check_tameness",
    "proptame_orientation", "h_vector", "c_vector", "tiled_set_from_json", "build_complex",
    "tiling_from_order", "ordered_tile", "even_dehn_sommerville",
]
