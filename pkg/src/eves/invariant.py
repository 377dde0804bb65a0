"""Peano brackets and the weighted Eves invariant.

The bracket of an independent r-tuple is the determinant of the members'
coordinates in a chosen ordered basis of their span.  Multiplying the brackets
color by color yields a weighted projective point that is independent of every
choice made (representatives, bases, list order) and invariant under morphisms
whenever the configuration passes the admissibility check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg
from .configuration import (
    Configuration,
    ConfigurationError,
    ProjPoint,
    RTuple,
    Subspace,
    build_configuration,
    validate_h,
)
from .linalg import Matrix, Vector
from .wps import Weight, WeightedPoint


class NotHConfigurationError(ValueError):
    """The invariant was requested for a configuration that fails admissibility."""


class MorphismError(ValueError):
    """A linear map fails to be injective on some span of the configuration."""


class ChartError(ValueError):
    """A point at infinity was used where the affine chart x_0 != 0 is required."""


@dataclass(frozen=True)
class InvariantValue:
    """The invariant: a weighted point with every coordinate nonzero."""

    point: WeightedPoint

    def __post_init__(self) -> None:
        if not self.point.in_dense_locus():
            raise ValueError("invariant values have all coordinates nonzero")

    def __str__(self) -> str:
        return str(self.point)


@dataclass(frozen=True)
class LinearMorphism:
    """An exact rational matrix applied on the left to column coordinate vectors."""

    matrix: Matrix

    def __post_init__(self) -> None:
        rows = linalg.mat(self.matrix)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("morphism matrix must be rectangular and non-empty")
        object.__setattr__(self, "matrix", rows)


@dataclass(frozen=True)
class BasisChoice:
    """Optional overrides: per-subspace ordered bases and per-point representatives.

    Anything not listed falls back to the canonical choice (echelon basis,
    first-nonzero-scaled representative).
    """

    subspace_bases: dict[Subspace, Matrix] = field(default_factory=dict)
    point_reps: dict[str, Vector] = field(default_factory=dict)


def bracket(t: RTuple, basis: Sequence[Sequence[Fraction]], reps: Mapping[str, Sequence[Fraction]]) -> Fraction:
    """Determinant of the tuple members' coordinates in the given span basis."""
    coord_rows = []
    for name in t.members:
        coords = linalg.coords_in_row_basis(basis, reps[name])
        if coords is None:
            raise ValueError(f"basis does not span the representative of point {name!r}")
        coord_rows.append(coords)
    return linalg.det(coord_rows)


def canonical_point_reps(cfg: Configuration) -> dict[str, Vector]:
    return {name: linalg.scale_first_nonzero(pt.coords) for name, pt in cfg.points.items()}


def _require_h(cfg: Configuration) -> None:
    report = validate_h(cfg)
    if not report.h_valid:
        raise NotHConfigurationError(report.first_failure or "configuration is not admissible")


def _resolve_choices(cfg: Configuration, choices: BasisChoice | None) -> tuple[dict[Subspace, Matrix], dict[str, Vector]]:
    bases: dict[Subspace, Matrix] = {s: s.basis for s in cfg.subspaces()}
    reps = canonical_point_reps(cfg)
    if choices is None:
        return bases, reps
    for subspace, rows in choices.subspace_bases.items():
        rows = linalg.mat(rows)
        reduced, rk = linalg.rref(rows)
        if rk != len(rows) or reduced != subspace.basis:
            raise ValueError(f"supplied basis does not span {subspace}")
        bases[subspace] = rows
    for name, rep in choices.point_reps.items():
        if name not in cfg.points:
            raise ValueError(f"representative supplied for unknown point {name!r}")
        rep = linalg.vec(rep)
        stored = cfg.points[name].coords
        if all(x == 0 for x in rep) or linalg.rank([rep, stored]) != 1:
            raise ValueError(f"representative for {name!r} is not a nonzero multiple of its coordinates")
        reps[name] = rep
    return bases, reps


def eves_invariant_with_choices(cfg: Configuration, choices: BasisChoice | None) -> InvariantValue:
    """The invariant computed with caller-supplied bases and representatives."""
    _require_h(cfg)
    bases, reps = _resolve_choices(cfg, choices)
    coords = []
    for color in cfg.colors:
        product = Fraction(1)
        for t in color:
            product *= bracket(t, bases[cfg.spans[t]], reps)
        coords.append(product)
    return InvariantValue(WeightedPoint(tuple(coords), cfg.weight))


def eves_invariant(cfg: Configuration) -> InvariantValue:
    """The invariant with canonical choices; the value's class depends only on
    the configuration and its weight."""
    return eves_invariant_with_choices(cfg, None)


def _merged_name(names: list[str], used: set[str]) -> str:
    name = names[0] if len(names) == 1 else "+".join(sorted(names))
    while name in used:
        name += "'"
    return name


def apply_morphism(cfg: Configuration, morphism: LinearMorphism) -> Configuration:
    """Image configuration under a linear map injective on every span.

    Source points with the same projective image are merged under one name and
    one representative vector; the invariant class is unchanged.
    """
    rows = morphism.matrix
    if len(rows[0]) != cfg.dim + 1:
        raise MorphismError(
            f"matrix has {len(rows[0])} columns, expected {cfg.dim + 1}"
        )
    for subspace in cfg.subspaces():
        images = [linalg.mat_vec(rows, b) for b in subspace.basis]
        if linalg.rank(images) != cfg.arity:
            raise MorphismError(f"matrix is not injective on {subspace}")

    image_vectors: dict[str, Vector] = {}
    for name in sorted(cfg.points):
        img = linalg.mat_vec(rows, cfg.points[name].coords)
        if all(x == 0 for x in img):
            raise MorphismError(f"point {name!r} maps to the zero vector")
        image_vectors[name] = img

    groups: dict[Vector, list[str]] = {}
    for name in sorted(image_vectors):
        key = linalg.scale_first_nonzero(image_vectors[name])
        groups.setdefault(key, []).append(name)

    rename: dict[str, str] = {}
    image_points: dict[str, Vector] = {}
    used = set()
    for key in sorted(groups, key=lambda k: groups[k][0]):
        names = groups[key]
        merged = _merged_name(names, used)
        used.add(merged)
        for n in names:
            rename[n] = merged
        image_points[merged] = image_vectors[names[0]]

    new_colors = [
        [RTuple(tuple(rename[m] for m in t.members)) for t in color] for color in cfg.colors
    ]
    points = {name: ProjPoint(name, coords) for name, coords in image_points.items()}
    new_dim = len(rows) - 1
    try:
        return build_configuration(cfg.weight, cfg.arity, new_dim, new_colors, points)
    except ConfigurationError as exc:
        raise MorphismError(str(exc)) from None


def _distinct_collinear(points: Sequence[ProjPoint]) -> None:
    names = [p.name for p in points]
    if len(set(names)) != len(names):
        raise ValueError("points must carry distinct names")
    vectors = [p.coords for p in points]
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            if linalg.rank([vectors[a], vectors[b]]) != 2:
                raise ValueError(f"points {names[a]!r} and {names[b]!r} coincide")
    if linalg.rank(vectors) != 2:
        raise ValueError("points are not collinear")


def cross_ratio(a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint) -> WeightedPoint:
    """Cross-ratio of the ordered quadruple (a, b, c, d) as a (1,1)-weighted point.

    Encoded as the two-color configuration pairing (d,a),(c,b) against
    (c,a),(d,b) on their common line.
    """
    pts = (a, b, c, d)
    _distinct_collinear(pts)
    dim = len(a.coords) - 1
    colors = [
        [RTuple((d.name, a.name)), RTuple((c.name, b.name))],
        [RTuple((c.name, a.name)), RTuple((d.name, b.name))],
    ]
    cfg = build_configuration(Weight((1, 1)), 2, dim, colors, {p.name: p for p in pts})
    return eves_invariant(cfg).point


class TrianglePattern(Enum):
    SIX_POINT = "six-point"
    FIVE_POINT = "five-point"
    OCTAHEDRAL = "octahedral"


_PATTERNS = {
    # 1-based indices into the supplied point sequence
    TrianglePattern.SIX_POINT: (6, [[(1, 2, 4), (3, 5, 6)], [(1, 2, 3), (4, 5, 6)]], (1, 1)),
    TrianglePattern.FIVE_POINT: (5, [[(1, 2, 4), (3, 5, 1)], [(1, 2, 3), (4, 5, 1)]], (1, 1)),
    TrianglePattern.OCTAHEDRAL: (
        6,
        [[(4, 6, 5), (4, 2, 3), (5, 1, 2), (1, 3, 6)], [(1, 2, 3), (1, 6, 5), (2, 4, 5), (3, 4, 6)]],
        (2, 2),
    ),
}


def triangle_ratio(
    points: Sequence[ProjPoint],
    pattern: TrianglePattern,
    weight: Weight | None = None,
) -> WeightedPoint:
    """Signed-area style invariants of the classical triangle patterns.

    The six-point and five-point patterns give a (1,1)-weighted ratio of two
    triangle-bracket products; the octahedral pattern pairs four triangles per
    color and defaults to weight (2,2) (pass (1,1) to read it classically).
    """
    count, lists, default = _PATTERNS[pattern]
    if len(points) != count:
        raise ValueError(f"{pattern.value} pattern needs exactly {count} points")
    names = [p.name for p in points]
    if len(set(names)) != len(names):
        raise ValueError("points must carry distinct names")
    w = weight if weight is not None else Weight(default)
    dim = len(points[0].coords) - 1
    colors = [[RTuple(tuple(names[i - 1] for i in tri)) for tri in color] for color in lists]
    cfg = build_configuration(w, 3, dim, colors, {p.name: p for p in points})
    return eves_invariant(cfg).point


def signed_length_bracket(
    line: Subspace,
    seg: RTuple,
    basis: Sequence[Sequence[Fraction]],
    points: Mapping[str, ProjPoint],
) -> Fraction:
    """Affine parameter difference of a directed segment on a chart line.

    Both basis vectors must have first coordinate 1 and span the line; both
    endpoints must lie in the chart x_0 != 0.  The bracket of the
    chart-normalized representatives then equals t_2 - t_1.
    """
    if line.dim != 2 or len(basis) != 2:
        raise ValueError("signed lengths live on lines (two basis vectors)")
    basis = linalg.mat(basis)
    if any(row[0] != 1 for row in basis):
        raise ValueError("basis vectors must be chart-normalized (first coordinate 1)")
    if linalg.rank(basis) != 2 or any(not line.contains(row) for row in basis):
        raise ValueError(f"basis does not span {line}")
    if len(seg.members) != 2:
        raise ValueError("a directed segment has exactly two endpoints")
    reps = {}
    for name in seg.members:
        coords = points[name].coords
        if coords[0] == 0:
            raise ChartError(f"endpoint {name!r} is at infinity in the chart x_0 != 0")
        reps[name] = tuple(x / coords[0] for x in coords)
    return bracket(seg, basis, reps)
