"""Weighted projective points over exact rationals.

A weight (p_0, ..., p_n) defines the equivalence z ~ w iff some nonzero scalar
l satisfies w_k = l**p_k * z_k for all k.  Coordinates here are rationals
standing in for real scalars; the decision procedure is exact because l**g
(g the gcd of the weights at nonzero coordinates) is forced to equal one
specific rational, reducing existence of a real l to a sign test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .numtheory import ext_gcd


class FieldKind(Enum):
    """Which scalar field the rational coordinates stand in for."""

    REAL_LIKE = "real"
    COMPLEX_LIKE = "complex"


class UndefinedPointError(ValueError):
    """An axis projection was applied outside its domain (both coordinates zero)."""


@dataclass(frozen=True)
class Weight:
    parts: tuple[int, ...]
    field: FieldKind = FieldKind.REAL_LIKE

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if len(parts) < 2:
            raise ValueError("weight needs at least two parts")
        if any(p < 1 for p in parts):
            raise ValueError("weight parts must be positive")
        object.__setattr__(self, "parts", parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class WeightedPoint:
    coords: tuple[Fraction, ...]
    weight: Weight

    def __post_init__(self) -> None:
        coords = tuple(Fraction(c) for c in self.coords)
        if len(coords) != len(self.weight.parts):
            raise ValueError("coordinate count does not match the weight")
        if all(c == 0 for c in coords):
            raise ValueError("coordinates must not all be zero")
        object.__setattr__(self, "coords", coords)

    def in_dense_locus(self) -> bool:
        """True when every coordinate is nonzero."""
        return all(c != 0 for c in self.coords)

    def __str__(self) -> str:
        body = " : ".join(str(c) for c in self.coords)
        return f"[{body}]_{self.weight}"


@dataclass(frozen=True)
class AxisProjectionSpec:
    """Exponents (a, b) for the map z -> [z_i**a : z_j**b]; valid for a weight
    exactly when p_i*a == p_j*b."""

    i: int
    j: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if not (0 <= self.i < self.j):
            raise ValueError("indices must satisfy 0 <= i < j")
        if self.a < 1 or self.b < 1:
            raise ValueError("exponents must be positive")


def _bezout_for_gcd(values: list[int]) -> tuple[int, list[int]]:
    """gcd of the values plus coefficients a_k with sum(a_k * values[k]) == gcd."""
    g, coeffs = values[0], [1]
    for v in values[1:]:
        g2, x, y = ext_gcd(g, v)
        coeffs = [c * x for c in coeffs]
        coeffs.append(y)
        g = g2
    return g, coeffs


def wps_equivalent(z: WeightedPoint, w: WeightedPoint) -> bool:
    """Decide whether z and w name the same weighted projective point.

    True iff some real scalar l != 0 has w_k == l**p_k * z_k for every k.
    Zero patterns must agree; over the nonzero coordinates the Bezout
    combination mu of the ratios pins down l**g, so the ratios must be
    consistent with mu and mu must admit a real g-th root (g odd or mu > 0).
    """
    if z.weight != w.weight:
        raise ValueError("points live in different weighted projective spaces")
    if z.weight.field is not FieldKind.REAL_LIKE:
        raise ValueError("equivalence is decided for real-like weights only")
    for zk, wk in zip(z.coords, w.coords):
        if (zk == 0) != (wk == 0):
            return False
    nz = [k for k, zk in enumerate(z.coords) if zk != 0]
    parts = [z.weight.parts[k] for k in nz]
    ratios = [w.coords[k] / z.coords[k] for k in nz]
    g, coeffs = _bezout_for_gcd(parts)
    mu = Fraction(1)
    for r, a in zip(ratios, coeffs):
        mu *= r**a
    if any(r != mu ** (p // g) for r, p in zip(ratios, parts)):
        return False
    return g % 2 == 1 or mu > 0


def reduce_weight(p: Weight) -> Weight:
    """Divide out the common factor the scalar field lets us absorb.

    The returned weight defines the identical equivalence relation: over a
    complex-like field the full gcd divides out; over a real-like field the
    odd part of the gcd divides out, then factors of two as long as the
    halved parts all stay even.
    """
    parts = list(p.parts)
    g = math.gcd(*parts)
    if p.field is FieldKind.COMPLEX_LIKE:
        return Weight(tuple(x // g for x in parts), p.field)
    odd = g
    while odd % 2 == 0:
        odd //= 2
    parts = [x // odd for x in parts]
    while all(x % 4 == 0 for x in parts):
        parts = [x // 2 for x in parts]
    return Weight(tuple(parts), p.field)


def canonical_axis_projection(p: Weight, i: int, j: int) -> AxisProjectionSpec:
    """The lcm-exponent projection: a = lcm(p_i,p_j)/p_i, b = lcm(p_i,p_j)/p_j."""
    n = len(p.parts) - 1
    if not (0 <= i < j <= n):
        raise ValueError(f"indices ({i},{j}) out of range for weight of length {n + 1}")
    ell = math.lcm(p.parts[i], p.parts[j])
    return AxisProjectionSpec(i, j, ell // p.parts[i], ell // p.parts[j])


def apply_axis_projection(spec: AxisProjectionSpec, z: WeightedPoint) -> WeightedPoint:
    """Evaluate [z_i**a : z_j**b] as a (1,1)-weighted point."""
    parts = z.weight.parts
    if spec.j >= len(parts):
        raise ValueError("projection indices out of range for this point")
    if parts[spec.i] * spec.a != parts[spec.j] * spec.b:
        raise ValueError("exponents do not match the weight: p_i*a != p_j*b")
    zi, zj = z.coords[spec.i], z.coords[spec.j]
    if zi == 0 and zj == 0:
        raise UndefinedPointError(
            f"projection ({spec.i},{spec.j}) undefined: both coordinates are zero"
        )
    return WeightedPoint((zi**spec.a, zj**spec.b), Weight((1, 1), z.weight.field))


def factor_through_h(spec: AxisProjectionSpec, p: Weight) -> int:
    """The multiplier k with p_i*a == p_j*b == k * lcm(p_i, p_j)."""
    parts = p.parts
    if spec.j >= len(parts):
        raise ValueError("projection indices out of range for this weight")
    if parts[spec.i] * spec.a != parts[spec.j] * spec.b:
        raise ValueError("exponents do not match the weight: p_i*a != p_j*b")
    return (parts[spec.i] * spec.a) // math.lcm(parts[spec.i], parts[spec.j])


def index_pairs(p: Weight) -> tuple[tuple[int, int], ...]:
    """All coordinate pairs (i, j) with i < j, in lexicographic order."""
    return tuple(combinations(range(len(p.parts)), 2))


def product_map(z: WeightedPoint) -> tuple[WeightedPoint, ...]:
    """Canonical axis projections of z for every index pair, lexicographic order."""
    return tuple(
        apply_axis_projection(canonical_axis_projection(z.weight, i, j), z)
        for i, j in index_pairs(z.weight)
    )


def is_reconstructible(p: Weight) -> bool:
    """Whether generic points are pinned down by all their axis projections.

    Complex-like spaces always are; real-like spaces are iff some part is odd.
    """
    if p.field is FieldKind.COMPLEX_LIKE:
        return True
    return any(part % 2 == 1 for part in p.parts)


def nonreconstructible_witness(p: Weight) -> tuple[WeightedPoint, WeightedPoint]:
    """Two inequivalent points with identical axis-projection values.

    Defined for real-like weights with every part even: the second point
    carries -1 exactly where the part's power of two is minimal.  The pair
    realizes the two-to-one fiber of the product map.
    """
    if p.field is FieldKind.COMPLEX_LIKE:
        raise ValueError("witness pairs exist only over real-like weights")
    if any(part % 2 == 1 for part in p.parts):
        raise ValueError("witness requires every weight part to be even")
    twos = [(part & -part).bit_length() - 1 for part in p.parts]
    low = min(twos)
    ones = tuple(Fraction(1) for _ in p.parts)
    flipped = tuple(Fraction(-1) if e == low else Fraction(1) for e in twos)
    return WeightedPoint(ones, p), WeightedPoint(flipped, p)


def parse_rational(text: str) -> Fraction:
    """Parse '3', '-3', '3/4', '-3/4' into an exact rational."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational {text!r}: {exc}") from None


def parse_weight(text: str, field: FieldKind = FieldKind.REAL_LIKE) -> Weight:
    """Parse a comma-separated weight such as '2,2,4'."""
    try:
        parts = tuple(int(x) for x in str(text).split(","))
    except ValueError:
        raise ValueError(f"invalid weight {text!r}: parts must be integers") from None
    return Weight(parts, field)
