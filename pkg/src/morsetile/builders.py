"""Named example tilings used by the CLI and the test-suite."""
from __future__ import annotations

from typing import Callable

from .core import build_complex, octahedron, with_global_order
from .errors import DimensionGuard
from .product_complex import (
    circle_tiling,
    delta2_product,
    shelled_boundary_simplex,
    sphere_torus_tiling,
)
from .product_simplex import ProductTileSpec, tile_product_shelling
from .tiles import make_tile
from .tilings import TiledSet


def octahedron_tiling() -> TiledSet:
    """Morse tiling of the octahedron with one closed and two open triangles
    and one critical tile of index 1 (Morse face at vertex 1)."""
    K = with_global_order(octahedron(), order=[0, 2, 3, 4, 5, 1])
    tiles = (
        make_tile((0, 2, 4)),
        make_tile((0, 2, 5), (5,)),
        make_tile((0, 3, 4), (3,)),
        make_tile((0, 3, 5), (3, 5)),
        make_tile((1, 2, 4), (1,)),
        make_tile((1, 2, 5), (1, 2, 5)),
        make_tile((1, 3, 4), (1, 3, 4)),
        make_tile((1, 3, 5), (1,), (1,)),
    )
    return TiledSet(K, tiles, False)


def capped_cylinder() -> TiledSet:
    """Cylinder (edge x circle) with both boundary circles capped by open triangles."""
    edge = TiledSet(with_global_order(build_complex([(0, 1)])), (make_tile((0, 1)),), True)
    cyl, _ = delta2_product(edge)
    lab = cyl.complex.labels
    caps = []
    for x in (0, 1):
        caps.append(tuple(sorted(v for v, (a, _b) in lab.items() if a == x)))
    K = with_global_order(build_complex(list(cyl.complex.maximal) + caps))
    tiles = cyl.tiles + tuple(make_tile(c, c) for c in caps)
    return TiledSet(K, tiles, False)


def handle(k: int, n: int) -> TiledSet:
    """Open k-simplex times closed (n-k)-simplex."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return tile_product_shelling(ProductTileSpec(k, n - k, frozenset(range(k + 1)), frozenset()))


def iso_tiles(n: int, m: int, variant: str = "top") -> TiledSet:
    """Products tiled by mutually isomorphic basic tiles.

    ``top``: order-n tile times a closed m-simplex.  ``bottom``: order-1 tile
    times an open m-simplex.
    """
    if variant == "top":
        spec = ProductTileSpec(n, m, frozenset(range(n)), frozenset())
    elif variant == "bottom":
        spec = ProductTileSpec(n, m, frozenset({0}), frozenset(range(m + 1)))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return tile_product_shelling(spec)


def _with_comparison(S: TiledSet, report: dict) -> TiledSet:
    S.meta["formula_comparison"] = report
    return S


EXAMPLES: dict[str, Callable] = {
    "boundary-simplex": lambda n=2, **_: shelled_boundary_simplex(n),
    "boundary-simplex-nonshellable": lambda **_: circle_tiling(),
    "octahedron": lambda **_: octahedron_tiling(),
    "capped-cylinder": lambda **_: capped_cylinder(),
    "handle": lambda k=1, n=2, **_: handle(k, n),
    "sphere-torus": lambda n=1, m=1, **_: _with_comparison(*sphere_torus_tiling(n, m)),
    "iso-tiles": lambda n=2, m=2, variant="top", **_: iso_tiles(n, m, variant),
}

# examples that tile a closed manifold (enables the manifold-only checks)
CLOSED_MANIFOLDS = {"boundary-simplex", "boundary-simplex-nonshellable", "octahedron",
                    "capped-cylinder", "sphere-torus"}


def dimension_of_request(name: str, params: dict) -> int:
    if name == "boundary-simplex":
        return params.get("n", 2)
    if name == "handle":
        return params.get("n", 2)
    if name == "sphere-torus":
        return params.get("n", 1) + params.get("m", 1)
    if name == "iso-tiles":
        return params.get("n", 2) + params.get("m", 2)
    return 2


def build_example(name: str, max_dim: int = 8, **params) -> TiledSet:
    if name not in EXAMPLES:
        raise KeyError(name)
    if dimension_of_request(name, params) > max_dim:
        raise DimensionGuard(f"example {name} exceeds dimension {max_dim}")
    return EXAMPLES[name](**params)
