"""Exact integer vector arithmetic and rank-2 Gauss lattice reduction.

Everything here works on Python integers, so there is no rounding and no
overflow; norms are always compared squared.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import NamedTuple


class IntVec2(NamedTuple):
    """Integer 2-vector.

    Arithmetic operators are vector operations, not tuple ones:
    ``a + b`` adds componentwise and ``k * a`` scales.
    """

    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return IntVec2(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return IntVec2(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return IntVec2(-self.x, -self.y)

    def __mul__(self, k):  # type: ignore[override]
        return IntVec2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def dot(self, other) -> int:
        return self.x * other[0] + self.y * other[1]

    def norm2(self) -> int:
        return self.x * self.x + self.y * self.y


def det(a, b) -> int:
    return a[0] * b[1] - b[0] * a[1]


def dot(a, b) -> int:
    return a[0] * b[0] + a[1] * b[1]


def norm2(a) -> int:
    return a[0] * a[0] + a[1] * a[1]


def gcd_nonneg(a: int, b: int) -> int:
    """gcd(|a|, |b|) with gcd(a, 0) = |a|."""
    if a == 0 and b == 0:
        raise ValueError("zero vector has no gcd")
    return gcd(a, b)


def euclid_mod(x: int, m: int) -> int:
    """Representative of ``x`` modulo ``|m|`` in ``[0, |m|)``, also for negative ``x``."""
    if m == 0:
        raise ValueError("modulus must be nonzero")
    return x % abs(m)


class SingularBasisError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorBasis:
    """Ordered pair of independent lattice generators.

    The pair is stored with a positive determinant: when ``det(u1, u2) < 0``
    the first vector is negated, which generates the same lattice.
    """

    u1: IntVec2
    u2: IntVec2
    d: int = field(init=False)

    def __post_init__(self):
        u1 = IntVec2(int(self.u1[0]), int(self.u1[1]))
        u2 = IntVec2(int(self.u2[0]), int(self.u2[1]))
        d = det(u1, u2)
        if d == 0:
            raise SingularBasisError(f"vectors {tuple(u1)} and {tuple(u2)} are linearly dependent")
        if d < 0:
            u1 = -u1
            d = -d
        object.__setattr__(self, "u1", u1)
        object.__setattr__(self, "u2", u2)
        object.__setattr__(self, "d", d)

    @classmethod
    def from_coords(cls, x1: int, y1: int, x2: int, y2: int) -> "GeneratorBasis":
        return cls(IntVec2(x1, y1), IntVec2(x2, y2))

    def point(self, alpha: int, beta: int) -> IntVec2:
        """Lattice point ``alpha*u1 + beta*u2``."""
        return IntVec2(alpha * self.u1.x + beta * self.u2.x, alpha * self.u1.y + beta * self.u2.y)

    def contains(self, w) -> bool:
        """Whether ``w`` lies on the lattice spanned by the basis."""
        return det(w, self.u2) % self.d == 0 and det(self.u1, w) % self.d == 0

    def as_list(self) -> list[list[int]]:
        return [[self.u1.x, self.u1.y], [self.u2.x, self.u2.y]]


def is_reduced(basis: GeneratorBasis) -> bool:
    """Gauss-reduced test: ``|u1| <= |u2|`` and ``2|u1.u2| <= |u1|^2``."""
    n1 = basis.u1.norm2()
    return n1 <= basis.u2.norm2() and 2 * abs(basis.u1.dot(basis.u2)) <= n1


def _nearest_int(num: int, den: int) -> int:
    # round(num/den) for den > 0, halves rounded up
    return (2 * num + den) // (2 * den)


def gauss_reduce(basis: GeneratorBasis) -> GeneratorBasis:
    """Lagrange-Gauss reduction of a rank-2 integer lattice basis.

    The returned pair spans the same lattice, satisfies :func:`is_reduced`
    and contains a shortest nonzero lattice vector as its first entry.
    An already reduced basis is returned unchanged.
    """
    if is_reduced(basis):
        return basis
    a, b = basis.u1, basis.u2
    if a.norm2() > b.norm2():
        a, b = b, a
    while True:
        m = _nearest_int(a.dot(b), a.norm2())
        b = b - m * a
        if b.norm2() >= a.norm2():
            break
        a, b = b, a
    reduced = GeneratorBasis(a, b)
    # sign normalization may negate a, which keeps both conditions
    assert is_reduced(reduced)
    return reduced
