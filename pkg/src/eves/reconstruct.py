"""Two-color restrictions, unit-weight expansions, and reconstruction reports.

For every color pair (i, j) the restriction (S_i, S_j) is expanded into a
weight (1,1) configuration by duplicating the lists lcm/p_i and lcm/p_j times;
the classical two-color invariants of these expansions form the reconstruction
vector.  Each entry equals the corresponding axis projection of the full
weighted invariant, so the vector can never distinguish more configurations
than the weighted invariant does; over non-reconstructible weights it
distinguishes strictly fewer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .configuration import Configuration, build_configuration
from .invariant import eves_invariant
from .wps import (
    Weight,
    WeightedPoint,
    apply_axis_projection,
    canonical_axis_projection,
    index_pairs,
    wps_equivalent,
)


@dataclass(frozen=True)
class ReconstructionVector:
    pairs: tuple[tuple[int, int], ...]
    entries: tuple[WeightedPoint, ...]

    def __post_init__(self) -> None:
        if len(self.pairs) != len(self.entries):
            raise ValueError("one entry per index pair required")


@dataclass(frozen=True)
class CompareReport:
    ep_equivalent: bool
    reconstruction_equal: bool
    pairs: tuple[tuple[int, int], ...]
    entries_a: tuple[WeightedPoint, ...]
    entries_b: tuple[WeightedPoint, ...]
    pair_equal: tuple[bool, ...]
    invariant_a: WeightedPoint
    invariant_b: WeightedPoint

    def __post_init__(self) -> None:
        if self.ep_equivalent and not self.reconstruction_equal:
            raise ValueError("equivalent invariants cannot have differing reconstructions")


def restrict_pair(cfg: Configuration, i: int, j: int) -> Configuration:
    """The two-color configuration (S_i, S_j) under weight (p_i, p_j)."""
    n = len(cfg.weight.parts) - 1
    if not (0 <= i < j <= n):
        raise ValueError(f"color pair ({i},{j}) out of range for {n + 1} colors")
    parts = (cfg.weight.parts[i], cfg.weight.parts[j])
    colors = [cfg.colors[i], cfg.colors[j]]
    used = {name for color in colors for t in color for name in t.members}
    points = {name: cfg.points[name] for name in sorted(used)}
    return build_configuration(Weight(parts, cfg.weight.field), cfg.arity, cfg.dim, colors, points)


def unit_weight_expansion(pair_cfg: Configuration) -> Configuration:
    """Duplicate the two color lists up to the lcm of their weight parts.

    The result is a weight (1,1) configuration with ell multiplied by the lcm;
    admissibility is inherited from the weighted input.
    """
    if len(pair_cfg.weight.parts) != 2:
        raise ValueError("expansion takes a two-color configuration")
    p_i, p_j = pair_cfg.weight.parts
    ell = math.lcm(p_i, p_j)
    a, b = ell // p_i, ell // p_j
    colors = [list(pair_cfg.colors[0]) * a, list(pair_cfg.colors[1]) * b]
    return build_configuration(
        Weight((1, 1), pair_cfg.weight.field), pair_cfg.arity, pair_cfg.dim, colors, pair_cfg.points
    )


def reconstruction_vector(cfg: Configuration) -> ReconstructionVector:
    """Classical two-color invariants of all pairwise expansions, lexicographic order."""
    pairs = index_pairs(cfg.weight)
    entries = tuple(
        eves_invariant(unit_weight_expansion(restrict_pair(cfg, i, j))).point for i, j in pairs
    )
    return ReconstructionVector(pairs, entries)


def check_reconstruction_identity(cfg: Configuration) -> bool:
    """Whether every reconstruction entry equals the matching axis projection
    of the full weighted invariant (it must, for admissible configurations)."""
    full = eves_invariant(cfg).point
    vector = reconstruction_vector(cfg)
    for (i, j), entry in zip(vector.pairs, vector.entries):
        spec = canonical_axis_projection(cfg.weight, i, j)
        if not wps_equivalent(entry, apply_axis_projection(spec, full)):
            return False
    return True


def compare(cfg_a: Configuration, cfg_b: Configuration) -> CompareReport:
    """Equivalence of the weighted invariants versus equality of reconstruction vectors."""
    if cfg_a.weight != cfg_b.weight:
        raise ValueError("configurations carry different weights")
    if cfg_a.arity != cfg_b.arity:
        raise ValueError("configurations carry different arities")
    inv_a = eves_invariant(cfg_a).point
    inv_b = eves_invariant(cfg_b).point
    vec_a = reconstruction_vector(cfg_a)
    vec_b = reconstruction_vector(cfg_b)
    pair_equal = tuple(
        wps_equivalent(x, y) for x, y in zip(vec_a.entries, vec_b.entries)
    )
    return CompareReport(
        ep_equivalent=wps_equivalent(inv_a, inv_b),
        reconstruction_equal=all(pair_equal),
        pairs=vec_a.pairs,
        entries_a=vec_a.entries,
        entries_b=vec_b.entries,
        pair_equal=pair_equal,
        invariant_a=inv_a,
        invariant_b=inv_b,
    )


def _pair_label(i: int, j: int) -> str:
    return f"h_{i}{j}" if j <= 9 else f"h_{i},{j}"


def _ratio(entry: WeightedPoint) -> str:
    return "[" + " : ".join(str(c) for c in entry.coords) + "]"


def render_reconstruction(vector: ReconstructionVector, full: WeightedPoint, identity_ok: bool) -> str:
    lines = [
        f"{_pair_label(i, j)}: {_ratio(entry)}" for (i, j), entry in zip(vector.pairs, vector.entries)
    ]
    lines.append(f"E_p: {full}")
    lines.append(f"projection_identity: {'true' if identity_ok else 'false'}")
    return "\n".join(lines) + "\n"


def render_compare(report: CompareReport) -> str:
    lines = []
    for (i, j), ea, eb in zip(report.pairs, report.entries_a, report.entries_b):
        lines.append(f"{_pair_label(i, j)}: {_ratio(ea)} / {_ratio(eb)}")
    lines.append(f"E_p: {report.invariant_a} / {report.invariant_b}")
    lines.append(f"ep_equivalent: {'true' if report.ep_equivalent else 'false'}")
    lines.append(f"reconstruction_equal: {'true' if report.reconstruction_equal else 'false'}")
    return "\n".join(lines) + "\n"
