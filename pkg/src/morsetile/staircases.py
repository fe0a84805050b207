"""Staircases: interval covers (I_0, ..., I_n) of {0..m} with e(j) = b(j+1).

A staircase is stored by its arrays of interval ends ``b`` and ``e``.  The
lexicographic order on ``e[:n]`` orders the top simplices of the staircase
triangulation of the product of an n-simplex and an m-simplex.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidStaircase


@dataclass(frozen=True, order=True)
class Staircase:
    # field order gives the lexicographic order on e for fixed (n, m)
    n: int
    m: int
    e: tuple

    def __post_init__(self):
        e = tuple(int(x) for x in self.e)
        object.__setattr__(self, "e", e)
        if len(e) != self.n + 1 or e[-1] != self.m:
            raise InvalidStaircase(f"bad end array {e} for I({self.n},{self.m})", witness=list(e))
        if e[0] < 0 or any(a > b for a, b in zip(e, e[1:])):
            raise InvalidStaircase(f"end array {e} must be non-decreasing from 0", witness=list(e))

    @property
    def b(self) -> tuple:
        return (0,) + self.e[:-1]

    def interval(self, j: int) -> range:
        return range(self.b[j], self.e[j] + 1)

    @property
    def intervals(self) -> tuple:
        return tuple(tuple(self.interval(j)) for j in range(self.n + 1))

    def size(self, j: int) -> int:
        return self.e[j] - self.b[j] + 1

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "e": list(self.e)}

    def __repr__(self):
        return "Staircase(" + ", ".join("{" + ",".join(map(str, iv)) + "}" for iv in self.intervals) + ")"


def staircase_from_intervals(intervals: Sequence[Sequence[int]]) -> Staircase:
    ivs = [list(iv) for iv in intervals]
    n = len(ivs) - 1
    m = ivs[-1][-1]
    st = Staircase(n, m, tuple(iv[-1] for iv in ivs))
    if [list(iv) for iv in st.intervals] != ivs:
        raise InvalidStaircase(f"{ivs} is not a staircase", witness=ivs)
    return st


def staircase_from_json(data: dict) -> Staircase:
    return Staircase(int(data["n"]), int(data["m"]), tuple(data["e"]))


def iter_staircases(n: int, m: int) -> Iterator[Staircase]:
    """Yield I(n, m) in increasing lexicographic order."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")

    def extend(prefix: list, lo: int):
        if len(prefix) == n:
            yield Staircase(n, m, tuple(prefix) + (m,))
            return
        for v in range(lo, m + 1):
            prefix.append(v)
            yield from extend(prefix, v)
            prefix.pop()

    yield from extend([], 0)


def enumerate_staircases(n: int, m: int) -> list[Staircase]:
    return list(iter_staircases(n, m))


def reverse_staircase(I: Staircase) -> Staircase:
    n, m = I.n, I.m
    return Staircase(n, m, tuple(m - I.b[n - j] for j in range(n + 1)))


def function_of(I: Staircase) -> tuple:
    """The non-decreasing function j -> e_I(j) in C(n, m)."""
    return I.e


def staircase_of(f: Sequence[int], m: int | None = None) -> Staircase:
    f = tuple(f)
    return Staircase(len(f) - 1, f[-1] if m is None else m, f)


def check_function(f: Sequence[int], m: int) -> tuple:
    """The involution on C(n, m): j -> m - f(n-1-j) for j < n, and n -> m."""
    n = len(f) - 1
    return tuple(m - f[n - 1 - j] for j in range(n)) + (m,)


def transpose(I: Staircase) -> Staircase:
    """J_i = {j : i in I_j}, an element of I(m, n)."""
    ends = []
    for i in range(I.m + 1):
        ends.append(max(j for j in range(I.n + 1) if I.b[j] <= i <= I.e[j]))
    return Staircase(I.m, I.n, tuple(ends))
