"""Independent brute-force checkers shipped alongside the main algorithms.

Nothing here shares computational routines with the main pipeline: the scalar
search tries every bounded rational directly against the defining equations,
the congruence search scans the full residue range, the finite-field
enumeration builds equivalence classes as orbits, and the invariant is
re-evaluated with cofactor determinants, Cramer solves, and a different
representative normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .configuration import Configuration, RTuple, validate_h
from .invariant import InvariantValue, NotHConfigurationError
from .numtheory import CongruenceSystem
from .wps import Weight, WeightedPoint


@dataclass(frozen=True)
class SearchBound:
    """Limits for the brute-force searches."""

    lambda_height: int = 64
    crt_limit: int = 100_000
    field_order: int = 3

    def __post_init__(self) -> None:
        if min(self.lambda_height, self.crt_limit, self.field_order) < 1:
            raise ValueError("all bounds must be >= 1")


_CANDIDATE_CACHE: dict[int, tuple[tuple[int, int], ...]] = {}


def _candidates(bound: int) -> tuple[tuple[int, int], ...]:
    """Coprime (numerator, denominator) pairs up to the bound, by increasing height."""
    cached = _CANDIDATE_CACHE.get(bound)
    if cached is not None:
        return cached
    out: list[tuple[int, int]] = []
    for m in range(1, bound + 1):
        for k in range(1, m + 1):
            if math.gcd(k, m) == 1:
                out.append((k, m))
                if k != m:
                    out.append((m, k))
    result = tuple(out)
    _CANDIDATE_CACHE[bound] = result
    return result


def bounded_lambda_search(z: WeightedPoint, w: WeightedPoint, bound: SearchBound | int) -> bool:
    """Try every scalar +-a/b with a, b up to the bound against the definition.

    A candidate l passes iff w_k == l**p_k * z_k for every coordinate; the
    comparison is done with cross-multiplied integers.
    """
    height = bound.lambda_height if isinstance(bound, SearchBound) else int(bound)
    if z.weight != w.weight:
        raise ValueError("points live in different weighted projective spaces")
    parts = z.weight.parts
    cols = [
        (p, zk.numerator, zk.denominator, wk.numerator, wk.denominator)
        for p, zk, wk in zip(parts, z.coords, w.coords)
    ]
    for a, b in _candidates(height):
        for s in (1, -1):
            for p, zn, zd, wn, wd in cols:
                lhs = wn * zd * b**p
                rhs = (s**p) * (a**p) * zn * wd
                if lhs != rhs:
                    break
            else:
                return True
    return False


def exhaustive_crt(system: CongruenceSystem, limit: int = 100_000) -> tuple[int, int] | None:
    """Scan 0..lcm-1 for the least solution of the congruence system."""
    moduli = [b for _, b in system.entries]
    total = math.lcm(*moduli)
    if total > limit:
        raise ValueError(f"combined modulus {total} exceeds the exhaustive bound {limit}")
    for x in range(total):
        if all((x - k) % b == 0 for k, b in system.entries):
            return x, total
    return None


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d != 0 for d in range(2, int(math.isqrt(q)) + 1))


def ff_enumerate_classes(p: Weight, q: int) -> tuple[frozenset[tuple[int, ...]], ...]:
    """Equivalence classes of nonzero vectors over the field with q elements.

    Classes are orbits of the scalar action z_k -> l**p_k * z_k for l in the
    multiplicative group, so reflexivity, symmetry, and transitivity hold by
    construction.  Orbit sizes are checked to divide q - 1 and to partition
    the q**(n+1) - 1 nonzero vectors.
    """
    if not _is_prime(q) or q > 31:
        raise ValueError("field order must be a prime <= 31")
    n_coords = len(p.parts)
    if q**n_coords > 500_000:
        raise ValueError("vector space too large to enumerate")
    vectors = [v for v in product(range(q), repeat=n_coords) if any(v)]
    seen: set[tuple[int, ...]] = set()
    classes: list[frozenset[tuple[int, ...]]] = []
    for v in vectors:
        if v in seen:
            continue
        orbit = frozenset(
            tuple((pow(lam, pk, q) * vk) % q for pk, vk in zip(p.parts, v))
            for lam in range(1, q)
        )
        if (q - 1) % len(orbit) != 0:
            raise AssertionError("orbit size must divide the group order")
        classes.append(orbit)
        seen |= orbit
    if sum(len(c) for c in classes) != q**n_coords - 1:
        raise AssertionError("classes must partition the nonzero vectors")
    return tuple(sorted(classes, key=min))


def _cofactor_det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = Fraction(0)
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _cofactor_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def _last_nonzero_scaled(v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    pivot = next(x for x in reversed(v) if x != 0)
    return tuple(x / pivot for x in v)


def _in_span(basis: list[tuple[Fraction, ...]], v: tuple[Fraction, ...]) -> bool:
    """Rank test via vanishing of all (r+1)-minors of the stacked matrix."""
    rows = [list(b) for b in basis] + [list(v)]
    n_cols = len(v)
    for cols in combinations(range(n_cols), len(rows)):
        sub = [[row[c] for c in cols] for row in rows]
        if _cofactor_det(sub) != 0:
            return False
    return True


def _same_span(t1: list[tuple[Fraction, ...]], t2: list[tuple[Fraction, ...]]) -> bool:
    return all(_in_span(t1, v) for v in t2)


def _cramer_coords(basis: list[tuple[Fraction, ...]], pivot_cols: tuple[int, ...], v: tuple[Fraction, ...]) -> list[Fraction]:
    r = len(basis)
    m = [[basis[i][c] for i in range(r)] for c in pivot_cols]
    d = _cofactor_det(m)
    target = [v[c] for c in pivot_cols]
    coords = []
    for i in range(r):
        mi = [row[:i] + [t] + row[i + 1 :] for row, t in zip(m, target)]
        coords.append(_cofactor_det(mi) / d)
    # defensive full-equation check: the pivot columns determined the rest
    for c in range(len(v)):
        if sum(coords[i] * basis[i][c] for i in range(r)) != v[c]:
            raise ValueError("vector is not in the span of the basis")
    return coords


def _pivot_columns(basis: list[tuple[Fraction, ...]]) -> tuple[int, ...]:
    r = len(basis)
    n_cols = len(basis[0])
    for cols in combinations(range(n_cols), r):
        m = [[basis[i][c] for i in range(r)] for c in cols]
        if _cofactor_det(m) != 0:
            return cols
    raise ValueError("basis rows are linearly dependent")


def brute_invariant(cfg: Configuration) -> InvariantValue:
    """Re-evaluate the weighted invariant with an independent pipeline.

    Representatives are scaled so the last nonzero coordinate is 1; each
    span's basis is the representative tuple of its first occurrence (colors
    scanned in order); coordinates come from Cramer solves and determinants
    from cofactor expansion.  Span grouping uses minor-vanishing rank tests
    rather than echelon forms.
    """
    report = validate_h(cfg)
    if not report.h_valid:
        raise NotHConfigurationError(report.first_failure or "configuration is not admissible")
    reps = {name: _last_nonzero_scaled(pt.coords) for name, pt in cfg.points.items()}

    group_bases: list[list[tuple[Fraction, ...]]] = []
    tuple_group: dict[RTuple, int] = {}
    for color in cfg.colors:
        for t in color:
            if t in tuple_group:
                continue
            vectors = [reps[name] for name in t.members]
            for idx, basis in enumerate(group_bases):
                if _same_span(basis, vectors) and _same_span(vectors, basis):
                    tuple_group[t] = idx
                    break
            else:
                tuple_group[t] = len(group_bases)
                group_bases.append(vectors)

    pivots = [_pivot_columns(basis) for basis in group_bases]
    coords_out = []
    for color in cfg.colors:
        prod_c = Fraction(1)
        for t in color:
            idx = tuple_group[t]
            basis, cols = group_bases[idx], pivots[idx]
            rows = [_cramer_coords(basis, cols, reps[name]) for name in t.members]
            prod_c *= _cofactor_det(rows)
        coords_out.append(prod_c)
    return InvariantValue(WeightedPoint(tuple(coords_out), cfg.weight))
