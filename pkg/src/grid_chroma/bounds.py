"""Analytic bounds on the optimal color count and two constructive bases.

The bound formulas are float diagnostics. The two constructions are built
in exact arithmetic and are always valid.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import GeneratorBasis, IntVec2
from .hops import SQRT2, RadioParams

HEX_DENSITY = math.sqrt(3.0) / 2


@dataclass(frozen=True)
class ColorBounds:
    lower: float | None
    upper: float
    s_h: float
    s_s: float


def lower_bound(params: RadioParams) -> float:
    if not params.above_sqrt2:
        raise ValueError("lower bound requires R > sqrt(2)")
    r, h = float(params.range), params.hops
    return HEX_DENSITY * h * h * (r - SQRT2) ** 2


def upper_bound(params: RadioParams) -> float:
    hr = float(params.reach)
    return HEX_DENSITY * hr * hr + 2 * hr + (hr + 2) * SQRT2


def small_range_bound(params: RadioParams) -> float:
    """Color count ``(hR + 1)^2`` bounding the near-square construction."""
    return (float(params.reach) + 1) ** 2


def color_bounds(params: RadioParams) -> ColorBounds:
    lower = lower_bound(params) if params.above_sqrt2 else None
    up = upper_bound(params)
    return ColorBounds(lower, up, up, small_range_bound(params))


def near_hexagonal_basis(params: RadioParams) -> GeneratorBasis:
    """Approximate hexagonal lattice around the circle of radius ``hR``.

    ``B = hR (cos 60, sin 60)``; ``V2`` is the grid point just above and to
    the right of ``B`` (both coordinates strictly larger), ``V1 = (2 x2, 0)``.
    Every nonzero lattice point then lies strictly farther than ``hR``.
    """
    hr = params.reach
    x2 = math.floor(hr / 2) + 1
    # floor(hR*sqrt(3)/2) from an integer square root; B's y is never integral
    p, q = hr.numerator, hr.denominator
    y2 = math.isqrt(3 * p * p // (q * q)) // 2 + 1
    return GeneratorBasis(IntVec2(2 * x2, 0), IntVec2(x2, y2))


def near_square_basis(params: RadioParams) -> GeneratorBasis:
    lam = math.floor(params.reach) + 1
    return GeneratorBasis(IntVec2(lam, 0), IntVec2(0, lam))


def asymptotic_ratio(params: RadioParams, n_c: int) -> float:
    """``n_c`` over the hexagonal-packing estimate ``(sqrt 3 / 2) h^2 R^2``."""
    if n_c <= 0:
        raise ValueError("color count must be positive")
    hr = float(params.reach)
    return n_c / (HEX_DENSITY * hr * hr)
