"""Colored configurations of independent point tuples in projective space.

A configuration carries a weight with one part per color; color c holds
ell * p_c tuples of arity r, each tuple spanning an r-dimensional linear
subspace.  The admissibility check (``validate_h``) demands that per-point and
per-span color degrees are proportional to the weight with integer ratios.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .linalg import Matrix, Vector
from .wps import FieldKind, Weight, parse_rational


class ConfigurationError(ValueError):
    """Configuration data violates a structural requirement."""


@dataclass(frozen=True)
class ProjPoint:
    name: str
    coords: Vector

    def __post_init__(self) -> None:
        coords = linalg.vec(self.coords)
        if not self.name:
            raise ConfigurationError("point name must be non-empty")
        if all(c == 0 for c in coords):
            raise ConfigurationError(f"point {self.name!r}: zero vector is not a projective point")
        object.__setattr__(self, "coords", coords)


@dataclass(frozen=True, order=True)
class RTuple:
    members: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(str(m) for m in self.members))


@dataclass(frozen=True)
class Subspace:
    """Canonical reduced-echelon basis of an r-dimensional linear subspace."""

    basis: Matrix

    def __post_init__(self) -> None:
        basis = linalg.mat(self.basis)
        reduced, rk = linalg.rref(basis)
        if rk != len(basis) or reduced != basis:
            raise ConfigurationError("subspace basis must be reduced echelon rows of full rank")
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return linalg.coords_in_row_basis(self.basis, v) is not None

    def __str__(self) -> str:
        rows = "; ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis)
        return f"span[{rows}]"


def _sort_key(s: Subspace) -> tuple:
    return tuple(tuple(r) for r in s.basis)


@dataclass(frozen=True)
class Configuration:
    weight: Weight
    arity: int
    dim: int
    ell: int
    colors: tuple[tuple[RTuple, ...], ...]
    points: dict[str, ProjPoint]
    spans: dict[RTuple, Subspace] = field(compare=False, repr=False, default_factory=dict)

    def span_table(self) -> dict[RTuple, Subspace]:
        return self.spans

    def all_tuples(self) -> Iterable[RTuple]:
        for color in self.colors:
            yield from color

    def subspaces(self) -> tuple[Subspace, ...]:
        """Distinct spans, in deterministic basis order."""
        return tuple(sorted(set(self.spans.values()), key=_sort_key))


def _as_rtuple(t) -> RTuple:
    if isinstance(t, RTuple):
        return t
    return RTuple(tuple(t))


def build_configuration(
    weight: Weight,
    arity: int,
    dim: int,
    colors: Sequence[Sequence],
    points: Mapping[str, Sequence[Fraction] | ProjPoint],
) -> Configuration:
    """Validate and assemble a configuration.

    Infers ell from the color list lengths (|S_c| = ell * p_c must hold with
    one positive integer ell for every color), checks that every tuple names
    known points and is linearly independent, and stores each color as a
    deterministically sorted multiset.
    """
    if arity < 1:
        raise ConfigurationError("arity must be >= 1")
    if dim < 0:
        raise ConfigurationError("dimension must be >= 0")
    if arity > dim + 1:
        raise ConfigurationError(f"arity {arity} exceeds dim+1 = {dim + 1}")
    if len(colors) != len(weight.parts):
        raise ConfigurationError(
            f"{len(colors)} color lists for a weight of length {len(weight.parts)}"
        )

    table: dict[str, ProjPoint] = {}
    for name, value in points.items():
        if name in table:
            raise ConfigurationError(f"duplicate point name {name!r}")
        pt = value if isinstance(value, ProjPoint) else ProjPoint(str(name), linalg.vec(value))
        if pt.name != name:
            raise ConfigurationError(f"point table key {name!r} does not match point name {pt.name!r}")
        if len(pt.coords) != dim + 1:
            raise ConfigurationError(
                f"point {name!r}: expected {dim + 1} coordinates, got {len(pt.coords)}"
            )
        table[name] = pt

    ell: int | None = None
    stored: list[tuple[RTuple, ...]] = []
    spans: dict[RTuple, Subspace] = {}
    for c, color in enumerate(colors):
        tuples = [_as_rtuple(t) for t in color]
        p_c = weight.parts[c]
        if len(tuples) % p_c != 0:
            raise ConfigurationError(
                f"colors[{c}]: list length {len(tuples)} is not divisible by weight part {p_c}"
            )
        quotient = len(tuples) // p_c
        if quotient == 0:
            raise ConfigurationError(f"colors[{c}]: empty color list (ell would be 0)")
        if ell is None:
            ell = quotient
        elif quotient != ell:
            raise ConfigurationError(
                f"colors[{c}]: implies ell = {quotient}, but earlier colors imply ell = {ell}"
            )
        for k, t in enumerate(tuples):
            if len(t.members) != arity:
                raise ConfigurationError(
                    f"colors[{c}][{k}]: tuple has {len(t.members)} members, expected {arity}"
                )
            for name in t.members:
                if name not in table:
                    raise ConfigurationError(f"colors[{c}][{k}]: unknown point name {name!r}")
            if t not in spans:
                rows = [table[name].coords for name in t.members]
                reduced, rk = linalg.rref(rows)
                if rk != arity:
                    raise ConfigurationError(
                        f"colors[{c}][{k}]: dependent r-tuple {t.members}"
                    )
                spans[t] = Subspace(reduced)
        stored.append(tuple(sorted(tuples)))

    assert ell is not None
    return Configuration(weight, arity, dim, ell, tuple(stored), table, spans)


def span_of(t: RTuple | Sequence[str], cfg: Configuration) -> Subspace:
    """Canonical echelon basis of the span of the tuple's representative vectors."""
    t = _as_rtuple(t)
    known = cfg.spans.get(t)
    if known is not None:
        return known
    rows = []
    for name in t.members:
        if name not in cfg.points:
            raise ConfigurationError(f"unknown point name {name!r}")
        rows.append(cfg.points[name].coords)
    reduced, rk = linalg.rref(rows)
    if rk != len(t.members):
        raise ConfigurationError(f"dependent r-tuple {t.members}")
    return Subspace(reduced)


def point_degree(cfg: Configuration, name: str, c: int) -> int:
    """How many color-c tuples contain the named point (with multiplicity)."""
    if name not in cfg.points:
        raise ConfigurationError(f"unknown point name {name!r}")
    return sum(1 for t in cfg.colors[c] if name in t.members)


def subspace_degree(cfg: Configuration, subspace: Subspace, c: int) -> int:
    """How many color-c tuples span the given subspace (with multiplicity)."""
    return sum(1 for t in cfg.colors[c] if cfg.spans[t] == subspace)


@dataclass(frozen=True)
class DegreeReport:
    h_valid: bool
    ell: int
    weight: Weight
    point_degrees: dict[str, tuple[int, ...]]
    subspace_degrees: dict[Subspace, tuple[int, ...]]
    point_quotients: dict[str, int | None]
    subspace_multiplicities: dict[Subspace, int | None]
    first_failure: str | None


def _proportional(degrees: tuple[int, ...], parts: tuple[int, ...]) -> int | None:
    """The common integer ratio deg_c / p_c, or None when it does not exist."""
    q, rem = divmod(degrees[0], parts[0])
    if rem != 0:
        return None
    for d, p in zip(degrees[1:], parts[1:]):
        if d != q * p:
            return None
    return q


def validate_h(cfg: Configuration, weight: Weight | None = None) -> DegreeReport:
    """Degree bookkeeping plus the admissibility verdict.

    With ``weight`` given, the stored lists are re-read under that weight
    instead (useful for probing alternative descriptions); shape mismatches
    then surface as an invalid report, never as an exception.
    """
    w = weight if weight is not None else cfg.weight
    parts = w.parts
    failure: str | None = None

    if len(parts) != len(cfg.colors):
        failure = f"weight length {len(parts)} does not match {len(cfg.colors)} colors"
    else:
        ell = None
        for c, color in enumerate(cfg.colors):
            q, rem = divmod(len(color), parts[c])
            if rem != 0 or q == 0 or (ell is not None and q != ell):
                failure = f"colors[{c}]: length {len(color)} incompatible with weight part {parts[c]}"
                break
            ell = q

    point_counts: dict[str, list[int]] = {name: [0] * len(cfg.colors) for name in cfg.points}
    span_counts: Counter[tuple[Subspace, int]] = Counter()
    for c, color in enumerate(cfg.colors):
        for t in color:
            for name in t.members:
                point_counts[name][c] += 1
            span_counts[(cfg.spans[t], c)] += 1

    point_degrees = {name: tuple(v) for name, v in point_counts.items()}
    subspace_degrees = {
        s: tuple(span_counts[(s, c)] for c in range(len(cfg.colors))) for s in cfg.subspaces()
    }

    point_quotients: dict[str, int | None] = {}
    subspace_multiplicities: dict[Subspace, int | None] = {}
    if failure is None:
        for name in sorted(point_degrees):
            q = _proportional(point_degrees[name], parts)
            point_quotients[name] = q
            if q is None and failure is None:
                failure = f"point {name!r}: degrees {point_degrees[name]} not proportional to weight {w}"
        for s in cfg.subspaces():
            m = _proportional(subspace_degrees[s], parts)
            subspace_multiplicities[s] = m
            if m is None and failure is None:
                failure = f"{s}: degrees {subspace_degrees[s]} not proportional to weight {w}"
    else:
        point_quotients = {name: None for name in point_degrees}
        subspace_multiplicities = {s: None for s in subspace_degrees}

    ell_out = cfg.ell if weight is None else (len(cfg.colors[0]) // parts[0] if failure is None else 0)
    return DegreeReport(
        h_valid=failure is None,
        ell=ell_out,
        weight=w,
        point_degrees=point_degrees,
        subspace_degrees=subspace_degrees,
        point_quotients=point_quotients,
        subspace_multiplicities=subspace_multiplicities,
        first_failure=failure,
    )


# ---------------------------------------------------------------------------
# File format: a JSON document with exact rationals written as strings.
#
# {
#   "field": "rational",
#   "weight": [2, 2, 4],
#   "arity": 2,
#   "dim": 2,
#   "points": {"A": ["1", "0", "0"], "B": ["1", "1/2", "1/2"]},
#   "colors": [[["A", "B"], ...], ...]
# }
# ---------------------------------------------------------------------------


def _reject_duplicate_keys(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise ConfigurationError(f"duplicate point name {key!r}")
        seen[key] = value
    return seen


def _coord(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ConfigurationError(f"{where}: coordinates must be exact rationals, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except ValueError as exc:
            raise ConfigurationError(f"{where}: {exc}") from None
    raise ConfigurationError(f"{where}: coordinates must be rational strings or integers")


def parse_configuration(text: str, source: str = "<string>") -> Configuration:
    """Parse the JSON configuration format, with positional diagnostics."""
    try:
        doc = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except ConfigurationError as exc:
        raise ConfigurationError(f"{source}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{source}: invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigurationError(f"{source}: top level must be an object")

    def fail(msg: str) -> ConfigurationError:
        return ConfigurationError(f"{source}: {msg}")

    for key in ("field", "weight", "arity", "dim", "points", "colors"):
        if key not in doc:
            raise fail(f"missing field {key!r}")
    if doc["field"] != "rational":
        raise fail(f"field: expected 'rational', got {doc['field']!r}")
    if not isinstance(doc["weight"], list) or not all(
        isinstance(p, int) and not isinstance(p, bool) for p in doc["weight"]
    ):
        raise fail("weight: must be a list of integers")
    if not isinstance(doc["arity"], int) or not isinstance(doc["dim"], int):
        raise fail("arity/dim: must be integers")
    if not isinstance(doc["points"], dict):
        raise fail("points: must be an object")
    if not isinstance(doc["colors"], list):
        raise fail("colors: must be a list")

    try:
        weight = Weight(tuple(doc["weight"]), FieldKind.REAL_LIKE)
    except ValueError as exc:
        raise fail(f"weight: {exc}") from None

    points: dict[str, ProjPoint] = {}
    for name, coords in doc["points"].items():
        if not isinstance(coords, list):
            raise fail(f"points[{name!r}]: must be a list of rationals")
        try:
            values = [_coord(v, f"points[{name!r}][{k}]") for k, v in enumerate(coords)]
            points[name] = ProjPoint(name, tuple(values))
        except ConfigurationError as exc:
            raise fail(str(exc)) from None

    colors: list[list[RTuple]] = []
    for c, color in enumerate(doc["colors"]):
        if not isinstance(color, list):
            raise fail(f"colors[{c}]: must be a list of tuples")
        tuples = []
        for k, t in enumerate(color):
            if not isinstance(t, list) or not all(isinstance(m, str) for m in t):
                raise fail(f"colors[{c}][{k}]: must be a list of point names")
            tuples.append(RTuple(tuple(t)))
        colors.append(tuples)

    try:
        return build_configuration(weight, doc["arity"], doc["dim"], colors, points)
    except ConfigurationError as exc:
        raise fail(str(exc)) from None


def load_configuration(path) -> Configuration:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_configuration(text, source=str(path))


def configuration_to_json(cfg: Configuration) -> str:
    """Serialize in the input file format, deterministically ordered."""
    doc = {
        "field": "rational",
        "weight": list(cfg.weight.parts),
        "arity": cfg.arity,
        "dim": cfg.dim,
        "points": {name: [str(x) for x in cfg.points[name].coords] for name in sorted(cfg.points)},
        "colors": [[list(t.members) for t in color] for color in cfg.colors],
    }
    return json.dumps(doc, indent=2) + "\n"
