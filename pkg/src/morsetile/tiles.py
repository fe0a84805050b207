"""Basic and Morse tiles viewed as sets of open faces of a simplex.

A tile on the simplex ``sigma`` is encoded by ``removed``, the set of vertices
whose opposite facets are deleted, and an optional Morse face ``mu``.  Its open
faces are the faces of ``sigma`` that contain every removed vertex and are not
contained in ``mu``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .core import as_simplex, simplex_faces
from .errors import InvalidMorseFace, NotAMorseTile, NotBasic


@dataclass(frozen=True)
class TileSignature:
    dimension: int
    order: int
    morse_face_dimension: Optional[int]
    is_critical: bool
    index: Optional[int]


@dataclass(frozen=True)
class MorseTile:
    simplex: tuple
    removed: tuple = ()
    morse_face: Optional[tuple] = None

    @property
    def dimension(self) -> int:
        return len(self.simplex) - 1

    @property
    def order(self) -> int:
        return len(self.removed)

    @property
    def is_basic(self) -> bool:
        return self.morse_face is None

    def contains(self, face) -> bool:
        face = set(face)
        if not face or not face <= set(self.simplex):
            return False
        if not set(self.removed) <= face:
            return False
        return self.morse_face is None or not face <= set(self.morse_face)

    def relabel(self, mapping) -> "MorseTile":
        mu = None if self.morse_face is None else tuple(sorted(mapping[v] for v in self.morse_face))
        return MorseTile(tuple(sorted(mapping[v] for v in self.simplex)),
                         tuple(sorted(mapping[v] for v in self.removed)), mu)

    def to_json(self) -> dict:
        return {"simplex": list(self.simplex), "removed": list(self.removed),
                "morse_face": None if self.morse_face is None else list(self.morse_face)}


def make_tile(simplex: Iterable[int], removed: Iterable[int] = (),
              morse_face: Optional[Iterable[int]] = None) -> MorseTile:
    s = as_simplex(simplex)
    n = len(s) - 1
    rem = tuple(sorted(set(int(v) for v in removed)))
    if not set(rem) <= set(s):
        raise InvalidMorseFace(f"removed vertices {rem} not in simplex {s}", witness=list(rem))
    mu = None
    if morse_face is not None:
        mu = tuple(sorted(set(int(v) for v in morse_face)))
        if not mu:
            mu = None
    if mu is not None:
        k = len(rem)
        if k < 1:
            raise InvalidMorseFace("a Morse face requires at least one removed facet", witness=list(mu))
        if not set(mu) <= set(s) or len(mu) == len(s):
            raise InvalidMorseFace(f"Morse face {mu} is not a proper face of {s}", witness=list(mu))
        if not set(rem) <= set(mu):
            raise InvalidMorseFace("Morse face must contain every removed vertex", witness=list(mu))
        if len(mu) - 1 > n - 2:
            raise InvalidMorseFace("Morse face must have codimension at least two", witness=list(mu))
    return MorseTile(s, rem, mu)


def tile_from_json(data: dict) -> MorseTile:
    return make_tile(data["simplex"], data.get("removed", ()), data.get("morse_face"))


def face_set(T: MorseTile) -> frozenset:
    rem = set(T.removed)
    mu = set(T.morse_face) if T.morse_face is not None else None
    out = []
    for f in simplex_faces(T.simplex):
        fs = set(f)
        if rem <= fs and (mu is None or not fs <= mu):
            out.append(f)
    return frozenset(out)


def signature(T: MorseTile) -> TileSignature:
    n, k = T.dimension, T.order
    l = None if T.morse_face is None else len(T.morse_face) - 1
    if k == 0:
        return TileSignature(n, k, l, True, 0)
    if k == n + 1:
        return TileSignature(n, k, l, True, n)
    if l is not None and l == k - 1:
        return TileSignature(n, k, l, True, k)
    return TileSignature(n, k, l, False, None)


def euler_contribution(T: MorseTile) -> int:
    return sum((-1) ** (len(f) - 1) for f in face_set(T))


def recognize_tile(faces: Iterable) -> MorseTile:
    """Return the unique Morse tile whose open faces are exactly ``faces``.

    A lone vertex is read as the closed point.
    """
    F = {tuple(sorted(f)) for f in faces}
    if not F:
        raise NotAMorseTile("empty face set")
    sigma = tuple(sorted(set().union(*F)))
    if sigma not in F:
        raise NotAMorseTile("face set does not contain its spanning simplex", witness=list(sigma))
    if len(sigma) == 1:
        return MorseTile(sigma)
    R = set(sigma)
    for f in F:
        R &= set(f)
    rest = [v for v in sigma if v not in R]
    absent = []
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            cand = tuple(sorted(R.union(extra)))
            if cand and cand not in F:
                absent.append(cand)
    mu = None
    if absent:
        mu = max(absent, key=len)
        if not all(set(a) <= set(mu) for a in absent):
            raise NotAMorseTile("missing faces containing the common face have no single maximum",
                                witness=[list(a) for a in absent])
    try:
        T = make_tile(sigma, R, mu)
    except InvalidMorseFace as exc:
        raise NotAMorseTile(f"no Morse tile fits: {exc}", witness=sorted(list(f) for f in F)) from exc
    if face_set(T) != frozenset(F):
        raise NotAMorseTile("face set is not an interval-shaped Morse tile",
                            witness=sorted(list(f) for f in F))
    return T


def dual_basic(T: MorseTile) -> MorseTile:
    if not T.is_basic:
        raise NotBasic("only basic tiles have duals", witness=T.to_json())
    return MorseTile(T.simplex, tuple(v for v in T.simplex if v not in T.removed))


def standard_tile(n: int, removed: Iterable[int] = (), morse_cut: Optional[int] = None) -> MorseTile:
    """Tile on the standard simplex [0..n], Morse face {morse_cut..n} when given."""
    mu = None if morse_cut is None else range(morse_cut, n + 1)
    return make_tile(range(n + 1), removed, mu)


def all_tiles(simplex) -> list[MorseTile]:
    """Every valid Morse tile on ``simplex`` (exponential; test helper)."""
    s = as_simplex(simplex)
    out = []
    for k in range(len(s) + 1):
        for rem in combinations(s, k):
            out.append(MorseTile(s, rem))
            if k == 0:
                continue
            rest = [v for v in s if v not in rem]
            for extra in range(len(rest) + 1):
                for more in combinations(rest, extra):
                    mu = tuple(sorted(rem + more))
                    if len(mu) <= len(s) - 2:
                        out.append(MorseTile(s, rem, mu))
    return out
