from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from morsetile.core import (
    GradedVector,
    barycentric_subdivision,
    boundary_of_simplex,
    build_complex,
    complex_from_json,
    complex_to_json,
    derive_vertex_orders,
    euler_characteristic,
    f_vector,
    h_vector_complex,
    octahedron,
    simplex_complex,
    with_global_order,
)
from morsetile.errors import (
    DuplicateVertexInSimplex,
    EmptyComplex,
    EmptySimplex,
    InvalidOrientation,
    OrientedTriangleCycle,
)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def h_oracle(f):
    """Expand sum f_(i-1) (X-1)^(d-i) and read h off the coefficients of X^(d-i)."""
    d = len(f) - 1
    total = [0] * (d + 1)  # index = power of X
    for i, fi in enumerate(f):
        p = [1]
        for _ in range(d - i):
            p = poly_mul(p, [-1, 1])
        for k, c in enumerate(p):
            total[k] += fi * c
    return tuple(total[d - i] for i in range(d + 1))


@st.composite
def complexes(draw, max_vertices=6):
    nv = draw(st.integers(1, max_vertices))
    simplices = draw(st.lists(st.sets(st.integers(0, nv - 1), min_size=1, max_size=4),
                              min_size=1, max_size=6))
    return build_complex(simplices)


def test_build_single_triangle():
    K = build_complex([[0, 1, 2]])
    assert len(K.faces_of_dim(2)) == 1 and len(K.edges) == 3 and len(K.vertices) == 3


def test_build_boundary_triangle():
    K = build_complex([[0, 1], [1, 2], [0, 2]])
    assert K == boundary_of_simplex([0, 1, 2])
    assert len(K.edges) == 3 and len(K.vertices) == 3


def test_faces_are_absorbed():
    assert build_complex([[0, 1, 2], [0, 1]]) == build_complex([[0, 1, 2]])


def test_build_errors():
    with pytest.raises(DuplicateVertexInSimplex):
        build_complex([[0, 0, 1]])
    with pytest.raises(EmptySimplex):
        build_complex([[]])
    with pytest.raises(EmptyComplex):
        build_complex([])


def test_declared_isolated_vertex():
    K = build_complex([[0, 1]], vertices=[0, 1, 2])
    assert (2,) in K.maximal


def test_f_vectors():
    assert f_vector(boundary_of_simplex([0, 1, 2])).tolist() == [1, 3, 3]
    assert f_vector(simplex_complex([0, 1, 2])).tolist() == [1, 3, 3, 1]
    # octahedron: 6 vertices, each of the 15 pairs is an edge except 3 antipodal ones
    K = octahedron()
    assert f_vector(K).tolist() == [1, 6, 15 - 3, 8]


def test_h_vectors():
    assert h_vector_complex(boundary_of_simplex(range(4))).tolist() == [1, 1, 1, 1]
    assert h_vector_complex(simplex_complex(range(3))).tolist() == [1, 0, 0, 0]
    assert h_vector_complex(boundary_of_simplex(range(3))).tolist() == [1, 1, 1]


@settings(max_examples=80, deadline=None)
@given(complexes())
def test_h_vector_matches_polynomial_oracle(K):
    assert h_vector_complex(K).entries == h_oracle(f_vector(K).entries)


def test_euler():
    assert euler_characteristic(boundary_of_simplex(range(4))) == 2
    assert euler_characteristic(octahedron()) == 2
    assert euler_characteristic(simplex_complex(range(6))) == 1


def test_global_order_gives_restricted_orders():
    K = with_global_order(build_complex([[0, 1, 2, 3], [2, 3, 4]]), order=[4, 3, 2, 1, 0])
    orders = derive_vertex_orders(K)
    assert orders[(0, 1, 2, 3)] == (3, 2, 1, 0)
    assert orders[(2, 3, 4)] == (4, 3, 2)


def test_cyclic_triangle_rejected():
    K = build_complex([[0, 1, 2]], orientation=[(0, 1), (1, 2), (2, 0)])
    with pytest.raises(OrientedTriangleCycle):
        derive_vertex_orders(K)


def test_cyclic_boundary_without_triangle_is_fine():
    K = build_complex([[0, 1], [1, 2], [0, 2]], orientation=[(0, 1), (1, 2), (2, 0)])
    assert derive_vertex_orders(K)[(0, 1)] == (0, 1)


def test_orientation_must_cover_edges():
    with pytest.raises(InvalidOrientation):
        build_complex([[0, 1, 2]], orientation=[(0, 1), (1, 2)])
    with pytest.raises(InvalidOrientation):
        build_complex([[0, 1]], orientation=[(0, 1), (1, 0)])


@settings(max_examples=60, deadline=None)
@given(complexes(), st.randoms(use_true_random=False))
def test_orders_restrict_along_faces(K, rnd):
    order = list(K.vertices)
    rnd.shuffle(order)
    K = with_global_order(K, order)
    orders = derive_vertex_orders(K)
    for s, o in orders.items():
        for t in combinations(s, len(s) - 1):
            if t:
                assert orders[t] == tuple(v for v in o if v in t)


def test_subdivision_of_edge():
    Sd = barycentric_subdivision(simplex_complex([0, 1]))
    assert len(Sd.vertices) == 3 and len(Sd.edges) == 2
    middle = next(v for v, f in Sd.labels.items() if len(f) == 2)
    assert all(Sd.points_to(middle, w) for w in Sd.vertices if w != middle)


def test_subdivision_counts():
    Sd = barycentric_subdivision(simplex_complex(range(3)))
    assert f_vector(Sd).tolist() == [1, 7, 12, 6]
    hexagon = barycentric_subdivision(boundary_of_simplex(range(3)))
    assert f_vector(hexagon).tolist() == [1, 6, 6]


def flag_count(K, length):
    """Chains of faces of the given length, by brute force over orderings."""
    faces = sorted(K.faces)
    count = 0
    for chain in combinations(faces, length):
        for perm in permutations(chain):
            if all(set(a) < set(b) for a, b in zip(perm, perm[1:])):
                count += 1
                break
    return count


@settings(max_examples=25, deadline=None)
@given(complexes(max_vertices=5))
def test_subdivision_flag_oracle_and_euler(K):
    Sd = barycentric_subdivision(K)
    f = f_vector(Sd).entries
    for j in range(1, min(len(f), 4)):
        assert f[j] == flag_count(K, j)
    assert euler_characteristic(Sd) == euler_characteristic(K)
    derive_vertex_orders(Sd)


def test_graded_vector_ops():
    u, v = GradedVector((1, 1, 2)), GradedVector((1, 0, 0, 1))
    assert (u * v).tolist() == [1, 1, 2, 1, 1, 2]
    assert (u + v).tolist() == [2, 1, 2, 1]
    assert u.reversed().tolist() == [2, 1, 1]
    assert GradedVector((1, 2, 1)).is_palindromic()
    # arbitrary precision: no wrap-around
    big = GradedVector((2 ** 127, 1)) * GradedVector((2 ** 127, 1))
    assert big[0] == 2 ** 254


def test_complex_json_roundtrip():
    K = with_global_order(octahedron())
    assert complex_from_json(complex_to_json(K)) == K
