"""Staircase triangulation of a product of two simplices and Morse shellings
of products of two tiles.

Product vertex (j, i) of the n-simplex times the m-simplex has id j*(m+1)+i,
so the numeric order on ids is the lexicographic order on pairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core import build_complex, with_global_order
from .errors import InvalidSpec
from .staircases import Staircase, enumerate_staircases, reverse_staircase
from .tiles import MorseTile, face_set, make_tile, recognize_tile
from .tilings import TiledSet


def vertex_id(j: int, i: int, m: int) -> int:
    return j * (m + 1) + i


def vertex_pair(v: int, m: int) -> tuple:
    return divmod(v, m + 1)


def staircase_simplex(I: Staircase) -> tuple:
    return tuple(vertex_id(j, i, I.m) for j in range(I.n + 1) for i in I.interval(j))


def staircase_tile(I: Staircase) -> MorseTile:
    removed = [vertex_id(j, I.e[j], I.m) for j in range(I.n) if I.size(j) > 1]
    return make_tile(staircase_simplex(I), removed)


def product_complex_of_simplices(n: int, m: int):
    """Staircase triangulation of the product, oriented lexicographically."""
    K = build_complex([staircase_simplex(I) for I in enumerate_staircases(n, m)])
    K = with_global_order(K)
    labels = {vertex_id(j, i, m): (j, i) for j in range(n + 1) for i in range(m + 1)}
    return type(K)(K.vertices, K.maximal, K.orientation, labels)


def product_shelling(n: int, m: int) -> TiledSet:
    K = product_complex_of_simplices(n, m)
    tiles = tuple(staircase_tile(I) for I in enumerate_staircases(n, m))
    return TiledSet(K, tiles, True, {"n": n, "m": m})


def palindromic_map(v: int, n: int, m: int) -> int:
    j, i = vertex_pair(v, m)
    return vertex_id(n - j, m - i, m)


def exchange_map(v: int, n: int, m: int) -> int:
    """(j, i) in the n x m product goes to (i, j) in the m x n product."""
    j, i = vertex_pair(v, m)
    return vertex_id(i, j, n)


def palindromic_tile(T: MorseTile, n: int, m: int) -> MorseTile:
    return T.relabel({v: palindromic_map(v, n, m) for v in T.simplex})


def exchange_tile(T: MorseTile, n: int, m: int) -> MorseTile:
    return T.relabel({v: exchange_map(v, n, m) for v in T.simplex})


@dataclass(frozen=True)
class ProductTileSpec:
    """Pair of tiles on standard simplices [0..n] and [0..m].

    ``J1``/``J2`` list the vertices whose opposite facets are removed; ``k1``
    (resp. ``k2``) is the optional Morse cut, the Morse face being {k1..n}.
    """

    n: int
    m: int
    J1: frozenset = frozenset()
    J2: frozenset = frozenset()
    k1: Optional[int] = None
    k2: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "J1", frozenset(self.J1))
        object.__setattr__(self, "J2", frozenset(self.J2))
        for dim, J, k, name in ((self.n, self.J1, self.k1, "1"), (self.m, self.J2, self.k2, "2")):
            if dim < 0:
                raise InvalidSpec(f"negative dimension for factor {name}")
            if not J <= set(range(dim + 1)):
                raise InvalidSpec(f"J{name} = {sorted(J)} not inside [0..{dim}]")
            if k is not None:
                if not 1 < k <= dim:
                    raise InvalidSpec(f"Morse cut k{name} = {k} outside (1, {dim}]")
                if not J or not J <= set(range(k, dim + 1)):
                    raise InvalidSpec(f"J{name} must be a non-empty subset of [{k}..{dim}]")

    @property
    def tile1(self) -> MorseTile:
        mu = None if self.k1 is None else range(self.k1, self.n + 1)
        return make_tile(range(self.n + 1), self.J1, mu)

    @property
    def tile2(self) -> MorseTile:
        mu = None if self.k2 is None else range(self.k2, self.m + 1)
        return make_tile(range(self.m + 1), self.J2, mu)

    @property
    def is_basic(self) -> bool:
        return self.k1 is None and self.k2 is None

    def dual(self) -> "ProductTileSpec":
        if not self.is_basic:
            raise InvalidSpec("only basic pairs have duals")
        return ProductTileSpec(self.n, self.m, frozenset(range(self.n + 1)) - self.J1,
                               frozenset(range(self.m + 1)) - self.J2)

    def swapped(self) -> "ProductTileSpec":
        return ProductTileSpec(self.m, self.n, self.J2, self.J1, self.k2, self.k1)

    def condition_h(self) -> bool:
        n, m, J1, J2 = self.n, self.m, self.J1, self.J2
        if {0, n} <= J1 and not ({0, m} & J2):
            return False
        if {0, m} <= J2 and not ({0, n} & J1):
            return False
        return True

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "J1": sorted(self.J1), "J2": sorted(self.J2),
                "k1": self.k1, "k2": self.k2}


def iter_specs(n: int, m: int, basic_only: bool = False):
    """Every tile pair in standard position for the given dimensions."""
    def factor(d):
        for r in range(d + 2):
            for J in combinations(range(d + 1), r):
                yield frozenset(J), None
        if basic_only:
            return
        for k in range(2, d + 1):
            top = range(k, d + 1)
            for r in range(1, len(top) + 1):
                for J in combinations(top, r):
                    yield frozenset(J), k

    for J1, k1 in factor(n):
        for J2, k2 in factor(m):
            yield ProductTileSpec(n, m, J1, J2, k1, k2)


def _top_compatible(spec: ProductTileSpec) -> bool:
    return spec.n not in spec.J1 or spec.m in spec.J2


def _bottom_compatible(spec: ProductTileSpec) -> bool:
    return 0 not in spec.J2 or 0 in spec.J1


def uses_palindromic_family(spec: ProductTileSpec) -> bool:
    """Choose between the staircase shelling and its palindromic image.

    The palindromic family is the exchanged staircase shelling pulled back to
    T1 x T2, so choosing it amounts to swapping the factors.  A factor with a
    Morse face is put first; the first factor's top vertex may then be
    removed only together with the second factor's top vertex.  For two basic
    tiles one also asks, when possible, that the second factor's bottom
    vertex be removed only together with the first factor's bottom vertex.
    """
    if spec.k1 is None and spec.k2 is not None:
        return _top_compatible(spec.swapped())
    if spec.k1 is not None:
        return not _top_compatible(spec)
    sw = spec.swapped()
    if _top_compatible(spec) and _bottom_compatible(spec):
        return False
    if _top_compatible(sw) and _bottom_compatible(sw):
        return True
    return not _top_compatible(spec)


def product_face_filter(spec: ProductTileSpec):
    T1, T2 = spec.tile1, spec.tile2
    m = spec.m

    def keep(face) -> bool:
        s1 = tuple(sorted({v // (m + 1) for v in face}))
        s2 = tuple(sorted({v % (m + 1) for v in face}))
        return T1.contains(s1) and T2.contains(s2)

    return keep


def family_tiles(n: int, m: int, palindromic: bool) -> list:
    out = []
    for I in enumerate_staircases(n, m):
        T = staircase_tile(I)
        out.append(palindromic_tile(T, n, m) if palindromic else T)
    return out


def tile_product_shelling(spec: ProductTileSpec, palindromic: Optional[bool] = None) -> TiledSet:
    """Morse shelling of T1 x T2 by tracing one of the two staircase shellings.

    Each tile is computed as the set of open faces of the staircase tile whose
    projections lie in T1 and T2, then identified with ``recognize_tile``.
    """
    if palindromic is None:
        palindromic = uses_palindromic_family(spec)
    keep = product_face_filter(spec)
    tiles = []
    for T in family_tiles(spec.n, spec.m, palindromic):
        tiles.append(recognize_tile(f for f in face_set(T) if keep(f)))
    K = product_complex_of_simplices(spec.n, spec.m)
    return TiledSet(K, tuple(tiles), True,
                    {"spec": spec.to_json(), "family": "palindromic" if palindromic else "staircase"})


def check_order_formula(spec: ProductTileSpec, I: Staircase) -> int:
    """Predicted order of the traced staircase tile of ``I`` for a basic pair."""
    n = spec.n
    lone = sum(1 for j in range(n) if j not in spec.J1 and I.size(j) == 1)
    starts = {I.b[j] for j in range(1, n + 1)}
    fresh = sum(1 for i in spec.J2 if i not in starts)
    extra = 1 if (n in spec.J1 and I.size(n) == 1) else 0
    return n - lone + fresh + extra


def tile_product_h_vector(spec: ProductTileSpec):
    from .tilings import h_vector

    return h_vector(tile_product_shelling(spec))


def staircase_of_tile(S: TiledSet, index: int) -> Staircase:
    """Staircase indexing the ``index``-th tile of a product tiling."""
    spec = S.meta["spec"]
    I = enumerate_staircases(spec["n"], spec["m"])[index]
    return reverse_staircase(I) if S.meta.get("family") == "palindromic" else I
