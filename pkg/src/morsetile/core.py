"""Finite simplicial complexes, f-/h-vectors, edge orientations and subdivision.

Simplices are sorted tuples of integer vertex ids.  A complex stores only its
maximal simplices; faces are enumerated on demand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    DuplicateVertexInSimplex,
    EmptyComplex,
    EmptySimplex,
    InvalidOrientation,
    OrientedTriangleCycle,
)

Simplex = tuple  # sorted tuple[int, ...]


def as_simplex(vertices: Iterable[int]) -> Simplex:
    vs = list(vertices)
    if not vs:
        raise EmptySimplex("simplex must have at least one vertex")
    if len(set(vs)) != len(vs):
        raise DuplicateVertexInSimplex(f"duplicate vertex in {vs}", witness=vs)
    return tuple(sorted(int(v) for v in vs))


def simplex_faces(s: Sequence[int], proper: bool = False) -> list[Simplex]:
    """All non-empty faces of ``s`` (sorted tuples), smallest first."""
    s = tuple(s)
    top = len(s) - 1 if proper else len(s)
    return [c for k in range(1, top + 1) for c in combinations(s, k)]


@dataclass(frozen=True)
class GradedVector:
    """Integer vector indexed by grade; multiplication is the polynomial product."""

    entries: tuple

    def __post_init__(self):
        ents = tuple(int(x) for x in self.entries)
        if not ents:
            raise ValueError("graded vector needs at least one entry")
        object.__setattr__(self, "entries", ents)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __mul__(self, other: "GradedVector") -> "GradedVector":
        u, v = self.entries, other.entries
        w = [0] * (len(u) + len(v) - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    w[i + j] += a * b
        return GradedVector(tuple(w))

    def __add__(self, other: "GradedVector") -> "GradedVector":
        n = max(len(self), len(other))
        a = self.padded(n).entries
        b = other.padded(n).entries
        return GradedVector(tuple(x + y for x, y in zip(a, b)))

    def scaled(self, k: int) -> "GradedVector":
        return GradedVector(tuple(k * x for x in self.entries))

    def padded(self, length: int) -> "GradedVector":
        if length < len(self.entries):
            raise ValueError("cannot pad to a shorter length")
        return GradedVector(self.entries + (0,) * (length - len(self.entries)))

    def reversed(self) -> "GradedVector":
        return GradedVector(self.entries[::-1])

    def is_palindromic(self) -> bool:
        return self.entries == self.entries[::-1]

    def tolist(self) -> list[int]:
        return list(self.entries)

    def __repr__(self):
        return f"GradedVector{self.entries}"


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    maximal: tuple
    orientation: Optional[tuple] = None
    # vertex id -> provenance key (subdivided simplex, product pair, ...)
    labels: Optional[Mapping] = field(default=None, compare=False, hash=False, repr=False)

    @cached_property
    def faces(self) -> frozenset:
        out = set()
        for s in self.maximal:
            out.update(simplex_faces(s))
        return frozenset(out)

    @cached_property
    def dimension(self) -> int:
        return max(len(s) for s in self.maximal) - 1

    def faces_of_dim(self, d: int) -> list[Simplex]:
        return sorted(f for f in self.faces if len(f) == d + 1)

    @cached_property
    def edges(self) -> list[Simplex]:
        return self.faces_of_dim(1)

    def is_pure(self) -> bool:
        return len({len(s) for s in self.maximal}) == 1

    @cached_property
    def _direction(self) -> dict:
        if self.orientation is None:
            return {}
        return {frozenset(e): e for e in self.orientation}

    def points_to(self, a: int, b: int) -> bool:
        """True iff the edge {a, b} is oriented from ``a`` to ``b``."""
        try:
            return self._direction[frozenset((a, b))] == (a, b)
        except KeyError:
            raise InvalidOrientation(f"edge {{{a}, {b}}} carries no orientation", witness=[a, b])

    def with_orientation(self, orientation) -> "SimplicialComplex":
        return build_complex(self.maximal, vertices=self.vertices, orientation=orientation,
                             labels=self.labels)

    def __contains__(self, s) -> bool:
        return tuple(s) in self.faces


def _absorb(simplices: set) -> tuple:
    proper = set()
    for s in simplices:
        if len(s) > 1:
            proper.update(simplex_faces(s, proper=True))
    return tuple(sorted(simplices - proper))


def build_complex(maximal: Iterable[Iterable[int]], vertices: Optional[Iterable[int]] = None,
                  orientation: Optional[Iterable[Sequence[int]]] = None,
                  labels: Optional[Mapping] = None) -> SimplicialComplex:
    """Normalize a list of simplices into a complex.

    Simplices that are faces of other listed simplices are absorbed.  Declared
    vertices that lie in no simplex become isolated 0-simplices.
    """
    simplices = {as_simplex(s) for s in maximal}
    used = {v for s in simplices for v in s}
    if vertices is not None:
        declared = {int(v) for v in vertices}
        missing = used - declared
        if missing:
            raise ValueError(f"simplices use undeclared vertices {sorted(missing)}")
        simplices.update((v,) for v in declared - used)
        used = declared
    if not simplices:
        raise EmptyComplex("a complex needs at least one simplex")
    K = SimplicialComplex(tuple(sorted(used)), _absorb(simplices), None, labels)
    if orientation is None:
        return K
    pairs = sorted((int(a), int(b)) for a, b in orientation)
    edges = set(K.edges)
    seen = set()
    for a, b in pairs:
        e = (min(a, b), max(a, b))
        if a == b or e not in edges:
            raise InvalidOrientation(f"({a}, {b}) is not an edge of the complex", witness=[a, b])
        if e in seen:
            raise InvalidOrientation(f"edge {e} oriented twice", witness=list(e))
        seen.add(e)
    if seen != edges:
        raise InvalidOrientation("orientation must cover every edge",
                                 witness=[list(e) for e in sorted(edges - seen)])
    return SimplicialComplex(K.vertices, K.maximal, tuple(pairs), labels)


def simplex_complex(vertices: Sequence[int]) -> SimplicialComplex:
    return build_complex([vertices])


def boundary_of_simplex(vertices: Sequence[int]) -> SimplicialComplex:
    vs = as_simplex(vertices)
    if len(vs) < 2:
        raise EmptyComplex("boundary of a point is empty")
    return build_complex([tuple(v for v in vs if v != w) for w in vs])


def octahedron() -> SimplicialComplex:
    """Octahedron on antipodal pairs (0, 1), (2, 3), (4, 5)."""
    return build_complex([(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)])


def global_order_orientation(K: SimplicialComplex, order: Optional[Sequence[int]] = None):
    """Orient every edge from the smaller to the larger vertex of ``order``."""
    rank = {v: i for i, v in enumerate(order if order is not None else K.vertices)}
    return [(a, b) if rank[a] < rank[b] else (b, a) for a, b in K.edges]


def with_global_order(K: SimplicialComplex, order: Optional[Sequence[int]] = None) -> SimplicialComplex:
    return K.with_orientation(global_order_orientation(K, order))


def f_vector(K: SimplicialComplex) -> GradedVector:
    f = [0] * (K.dimension + 2)
    f[0] = 1
    for s in K.faces:
        f[len(s)] += 1
    return GradedVector(tuple(f))


def h_vector_from_f(f: Sequence[int]) -> GradedVector:
    """Solve sum h_i X^(d-i) = sum f_(i-1) (X-1)^(d-i) with d = len(f) - 1."""
    d = len(f) - 1
    h = []
    for k in range(d + 1):
        h.append(sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1)))
    return GradedVector(tuple(h))


def h_vector_complex(K: SimplicialComplex) -> GradedVector:
    return h_vector_from_f(f_vector(K).entries)


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** (len(s) - 1) for s in K.faces)


def cyclic_triangles(K: SimplicialComplex) -> list[Simplex]:
    bad = []
    for a, b, c in K.faces_of_dim(2):
        out = sorted([K.points_to(a, b) + K.points_to(a, c),
                      K.points_to(b, a) + K.points_to(b, c),
                      K.points_to(c, a) + K.points_to(c, b)])
        if out != [0, 1, 2]:
            bad.append((a, b, c))
    return bad


def order_simplex(K: SimplicialComplex, s: Sequence[int]) -> tuple:
    """Vertices of ``s`` listed increasingly for the orientation of ``K``.

    Assumes the orientation has no cyclic triangle; the rank of a vertex is the
    number of vertices of ``s`` pointing to it.
    """
    s = tuple(s)
    rank = {v: sum(K.points_to(w, v) for w in s if w != v) for v in s}
    return tuple(sorted(s, key=rank.__getitem__))


def derive_vertex_orders(K: SimplicialComplex) -> dict:
    """Map every face of ``K`` to its vertices in increasing induced order."""
    if K.orientation is None and K.dimension >= 1:
        raise InvalidOrientation("complex carries no orientation")
    bad = cyclic_triangles(K) if K.dimension >= 2 else []
    if bad:
        raise OrientedTriangleCycle(f"triangle {bad[0]} has a cyclically oriented boundary",
                                    witness=list(bad[0]))
    return {s: order_simplex(K, s) for s in K.faces}


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """First barycentric subdivision with its canonical orientation.

    Vertex ids enumerate the faces of ``K`` sorted by (dimension, vertices);
    ``labels`` maps each id back to its face.  The edge between the barycenters
    of a face and a proper subface points toward the subface.
    """
    ordered_faces = sorted(K.faces, key=lambda s: (len(s), s))
    vid = {s: i for i, s in enumerate(ordered_faces)}
    flags = []
    for top in K.maximal:
        for chain in _maximal_chains(top):
            flags.append(tuple(vid[f] for f in chain))
    orientation = []
    for s in ordered_faces:
        for t in simplex_faces(s, proper=True):
            orientation.append((vid[s], vid[t]))
    labels = {i: s for s, i in vid.items()}
    return build_complex(flags, vertices=range(len(ordered_faces)), orientation=orientation,
                         labels=labels)


def _maximal_chains(s: Simplex):
    if len(s) == 1:
        yield [s]
        return
    for i in range(len(s)):
        sub = s[:i] + s[i + 1:]
        for chain in _maximal_chains(sub):
            yield chain + [s]


def complex_to_json(K: SimplicialComplex) -> dict:
    out = {"vertices": list(K.vertices), "maximal": [list(s) for s in K.maximal]}
    if K.orientation is not None:
        out["orientation"] = [list(e) for e in K.orientation]
    return out


def complex_from_json(data: dict) -> SimplicialComplex:
    return build_complex(data["maximal"], vertices=data.get("vertices"),
                         orientation=data.get("orientation"))
