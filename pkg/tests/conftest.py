"""Shared test helpers: fixture paths and seeded random corpora."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings

from eves import Weight, WeightedPoint, build_configuration
from eves import linalg

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


def rand_fraction(rng: random.Random, lo: int = -4, hi: int = 4, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_nonzero_fraction(rng: random.Random, hi: int = 6, max_den: int = 6) -> Fraction:
    num = rng.choice([n for n in range(-hi, hi + 1) if n != 0])
    return Fraction(num, rng.randint(1, max_den))


def random_weighted_point(rng: random.Random, weight: Weight, dense: bool = True) -> WeightedPoint:
    coords = []
    for _ in weight.parts:
        if dense or rng.random() < 0.8:
            coords.append(rand_nonzero_fraction(rng))
        else:
            coords.append(Fraction(0))
    if all(c == 0 for c in coords):
        coords[0] = Fraction(1)
    return WeightedPoint(tuple(coords), weight)


def random_invertible_matrix(rng: random.Random, n: int) -> tuple:
    while True:
        m = tuple(tuple(Fraction(rng.randint(-3, 3)) for _ in range(n)) for _ in range(n))
        if linalg.det(m) != 0:
            return m


def random_h_configuration(rng: random.Random, *, parts=None, dim=None, arity: int = 2):
    """A random admissible configuration, valid by construction.

    Points are grouped into blocks of collinear points; every color receives
    p_c random pairings of each block's points, so per-point and per-span
    degrees are automatically proportional to the weight.
    """
    assert arity == 2, "the random corpus uses directed segments"
    if parts is None:
        parts = tuple(rng.randint(1, 4) for _ in range(rng.randint(2, 4)))
    weight = Weight(parts)
    dim = dim if dim is not None else rng.randint(1, 3)
    n_blocks = rng.randint(1, 2)

    points: dict[str, tuple[Fraction, ...]] = {}
    colors: list[list[tuple[str, str]]] = [[] for _ in parts]
    counter = 0

    def fresh_vec() -> tuple[Fraction, ...]:
        while True:
            v = tuple(rand_fraction(rng) for _ in range(dim + 1))
            if any(v):
                return v

    for _ in range(n_blocks):
        pairs_per_matching = rng.randint(1, 2)
        n_pts = 2 * pairs_per_matching
        block: list[str] = []
        if points and rng.random() < 0.5:
            shared = rng.choice(sorted(points))
            u = points[shared]
            block.append(shared)
        else:
            u = fresh_vec()
        while True:
            v = fresh_vec()
            if linalg.rank([u, v]) == 2:
                break
        params: set[Fraction] = set()
        while len(block) < n_pts:
            t = rand_fraction(rng, -6, 6)
            if t == 0 or t in params:
                continue
            params.add(t)
            name = f"q{counter}"
            counter += 1
            points[name] = tuple(a + t * b for a, b in zip(u, v))
            block.append(name)
        for c, p_c in enumerate(parts):
            for _ in range(p_c):
                perm = rng.sample(block, n_pts)
                for e in range(pairs_per_matching):
                    colors[c].append((perm[2 * e], perm[2 * e + 1]))

    return build_configuration(weight, 2, dim, colors, points)
