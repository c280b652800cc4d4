"""Validity of the periodic coloring spanned by a generator basis.

Nodes sharing the origin's color are exactly the lattice points, and color
classes are translates of the lattice, so a coloring is a valid h-hop
coloring iff no nonzero lattice point is within h hops of the origin.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .coloring import GridColoring, color_pair_ncc1
from .geometry import GeneratorBasis, IntVec2, is_reduced
from .hops import SQRT2, HopField, RadioParams, build_hop_field

SQRT3 = math.sqrt(3.0)


class VCMethod(str, enum.Enum):
    VC1 = "vc1"
    VC2 = "vc2"


@dataclass(frozen=True)
class ValidityVerdict:
    valid: bool
    method: VCMethod
    witness: IntVec2 | None = None

    def __bool__(self):
        return self.valid


def check_vc1(basis: GeneratorBasis, params: RadioParams, field: HopField | None = None) -> ValidityVerdict:
    """Scan the h-hop neighborhood of the origin for a node colored like the origin."""
    field = field or build_hop_field(params)
    for w, _ in field.reachable():
        if color_pair_ncc1(w, basis) == (0, 0):
            return ValidityVerdict(False, VCMethod.VC1, w)
    return ValidityVerdict(True, VCMethod.VC1)


def mu_value(params: RadioParams) -> float:
    r = float(params.range)
    return 2 * SQRT3 * r / (3 * (r - SQRT2))


def mu_bound(params: RadioParams) -> int:
    """Integer coefficient bound covering every ``|alpha| < mu(R)``.

    The value is rounded up after a small upward nudge, so floating point
    error can only enlarge the set of checked lattice points.
    """
    if not params.above_sqrt2:
        raise ValueError("VC2 requires R > sqrt(2)")
    return math.ceil(mu_value(params) + 1e-9)


def _coefficients(m: int):
    # one of each +/- pair, smallest max-norm first
    out = [(a, b) for a in range(-m, m + 1) for b in range(-m, m + 1) if a > 0 or (a == 0 and b > 0)]
    out.sort(key=lambda ab: (max(abs(ab[0]), abs(ab[1])), abs(ab[0]) + abs(ab[1]), ab))
    return out


def check_vc2(basis: GeneratorBasis, params: RadioParams, field: HopField | None = None) -> ValidityVerdict:
    """Check the lattice points with coefficients bounded by :func:`mu_bound`.

    Requires ``R > sqrt(2)`` and a Gauss-reduced basis.
    """
    m = mu_bound(params)
    if not is_reduced(basis):
        raise ValueError("VC2 requires reduced basis")
    field = field or build_hop_field(params)
    for a, b in _coefficients(m):
        p = basis.point(a, b)
        if field.hops(p) is not None:
            return ValidityVerdict(False, VCMethod.VC2, p)
    return ValidityVerdict(True, VCMethod.VC2)


def check_validity(basis: GeneratorBasis, params: RadioParams, field: HopField | None = None) -> ValidityVerdict:
    """VC2 when ``R > sqrt(2)`` and the basis is reduced, VC1 otherwise."""
    if params.above_sqrt2 and is_reduced(basis):
        return check_vc2(basis, params, field)
    return check_vc1(basis, params, field)


def vc2_batch(u1: np.ndarray, u2: np.ndarray, field: HopField, m: int) -> np.ndarray:
    """Vectorized VC2 over ``(n, 2)`` arrays of reduced generator pairs."""
    b = field.radius_box
    h = field.params.hops
    ok = np.ones(len(u1), dtype=bool)
    for a, c in _coefficients(m):
        px = a * u1[:, 0] + c * u2[:, 0]
        py = a * u1[:, 1] + c * u2[:, 1]
        inside = (np.abs(px) <= b) & (np.abs(py) <= b)
        if not inside.any():
            continue
        idx = np.nonzero(inside)[0]
        near = field.table[py[idx] + b, px[idx] + b] <= h
        ok[idx[near]] = False
    return ok


def window_conflicts(coloring: GridColoring, field: HopField, limit: int | None = None) -> list[tuple[IntVec2, IntVec2]]:
    """Pairs of same-colored nodes of the window within ``h`` hops of each other.

    Every pair is examined through its offset, which the field classifies
    exactly. Each unordered pair is reported once.
    """
    colors = coloring.colors
    hgt, wid = colors.shape
    found = []
    for w, _ in field.reachable():
        dx, dy = w
        if dy < 0 or (dy == 0 and dx < 0) or abs(dx) >= wid or dy >= hgt:
            continue
        a = colors[0:hgt - dy, max(0, -dx):wid - max(0, dx)]
        b = colors[dy:hgt, max(0, dx):wid - max(0, -dx)]
        rows, cols = np.nonzero(a == b)
        for r, c in zip(rows, cols):
            p = IntVec2(coloring.origin.x + int(c) + max(0, -dx), coloring.origin.y + int(r))
            found.append((p, p + w))
            if limit is not None and len(found) >= limit:
                return found
    return found
