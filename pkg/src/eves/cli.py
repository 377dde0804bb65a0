"""Command-line front end.

Subcommands: validate, invariant, reconstruct, compare, transform, wps-equiv,
witness.  Exit codes: 0 success / positive verdict, 1 negative verdict,
2 input error, 3 fully distinguishable (compare only), 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from . import oracle, reconstruct
from .configuration import (
    Configuration,
    ConfigurationError,
    configuration_to_json,
    load_configuration,
    validate_h,
)
from .invariant import (
    ChartError,
    LinearMorphism,
    MorphismError,
    NotHConfigurationError,
    apply_morphism,
    eves_invariant,
)
from .wps import (
    UndefinedPointError,
    Weight,
    WeightedPoint,
    nonreconstructible_witness,
    parse_rational,
    parse_weight,
    product_map,
    wps_equivalent,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_DISTINGUISHABLE = 3
EXIT_ORACLE_MISMATCH = 4

_INPUT_ERRORS = (
    ConfigurationError,
    NotHConfigurationError,
    MorphismError,
    ChartError,
    UndefinedPointError,
    ValueError,
    OSError,
)


@dataclass
class RunSpec:
    command: str
    inputs: tuple[str, ...] = ()
    matrix: str | None = None
    weight: str | None = None
    point_a: str | None = None
    point_b: str | None = None
    use_oracle: bool = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eves",
        description="Exact weighted projective invariants of colored point configurations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_oracle(p):
        p.add_argument("--oracle", action="store_true", help="re-run through the brute-force pipeline; exit 4 on mismatch")
        return p

    p = with_oracle(sub.add_parser("validate", help="degree report and admissibility verdict"))
    p.add_argument("input")
    p.add_argument("--weight", help="re-validate under this weight, e.g. 1,1")

    p = with_oracle(sub.add_parser("invariant", help="compute the weighted invariant"))
    p.add_argument("input")

    p = with_oracle(sub.add_parser("reconstruct", help="reconstruction vector and projection identity"))
    p.add_argument("input")

    p = with_oracle(sub.add_parser("compare", help="compare two configurations"))
    p.add_argument("input_a")
    p.add_argument("input_b")

    p = with_oracle(sub.add_parser("transform", help="apply a linear morphism, emit the image configuration"))
    p.add_argument("input")
    p.add_argument("--matrix", required=True, help="JSON file: array of rows of rational strings")

    p = with_oracle(sub.add_parser("wps-equiv", help="decide weighted equivalence of two coordinate vectors"))
    p.add_argument("--weight", required=True)
    p.add_argument("--a", required=True, dest="point_a", help="comma-separated rationals")
    p.add_argument("--b", required=True, dest="point_b", help="comma-separated rationals")
    # let coordinate vectors such as -1,-1 pass as option values
    p._negative_number_matcher = re.compile(r"^-\d")

    p = with_oracle(sub.add_parser("witness", help="inequivalent point pair with equal axis projections"))
    p.add_argument("--weight", required=True)

    return parser


def _spec_from_args(args: argparse.Namespace) -> RunSpec:
    inputs = tuple(
        getattr(args, name) for name in ("input", "input_a", "input_b") if getattr(args, name, None)
    )
    return RunSpec(
        command=args.command,
        inputs=inputs,
        matrix=getattr(args, "matrix", None),
        weight=getattr(args, "weight", None),
        point_a=getattr(args, "point_a", None),
        point_b=getattr(args, "point_b", None),
        use_oracle=getattr(args, "oracle", False),
    )


def _load_matrix(path: str) -> LinearMorphism:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(doc, list) or not doc or not all(isinstance(r, list) for r in doc):
        raise ConfigurationError(f"{path}: matrix must be a non-empty array of rows")
    rows = []
    for i, row in enumerate(doc):
        entries = []
        for j, value in enumerate(row):
            if isinstance(value, bool) or isinstance(value, float):
                raise ConfigurationError(f"{path}: row {i} column {j}: entries must be exact rationals")
            try:
                entries.append(parse_rational(str(value)))
            except ValueError as exc:
                raise ConfigurationError(f"{path}: row {i} column {j}: {exc}") from None
        rows.append(entries)
    if any(len(r) != len(rows[0]) for r in rows):
        raise ConfigurationError(f"{path}: matrix rows have unequal lengths")
    return LinearMorphism(tuple(tuple(r) for r in rows))


def _parse_point(weight: Weight, text: str) -> WeightedPoint:
    coords = tuple(parse_rational(x) for x in text.split(","))
    return WeightedPoint(coords, weight)


def _render_report(report) -> str:
    lines = [f"h_valid: {'true' if report.h_valid else 'false'}"]
    lines.append(f"ell: {report.ell}")
    lines.append(f"weight: {report.weight}")
    for name in sorted(report.point_degrees):
        degs = ",".join(str(d) for d in report.point_degrees[name])
        q = report.point_quotients.get(name)
        suffix = f" quotient {q}" if q is not None else ""
        lines.append(f"point {name}: degrees ({degs}){suffix}")
    for subspace in sorted(report.subspace_degrees, key=lambda s: tuple(map(tuple, s.basis))):
        degs = ",".join(str(d) for d in report.subspace_degrees[subspace])
        m = report.subspace_multiplicities.get(subspace)
        suffix = f" multiplicity {m}" if m is not None else ""
        lines.append(f"{subspace}: degrees ({degs}){suffix}")
    if report.first_failure:
        lines.append(f"failure: {report.first_failure}")
    return "\n".join(lines) + "\n"


def _oracle_invariant_matches(cfg: Configuration) -> bool:
    return wps_equivalent(eves_invariant(cfg).point, oracle.brute_invariant(cfg).point)


def _recount_degrees(cfg: Configuration) -> bool:
    """Naive recount of point degrees against the report (validate --oracle)."""
    report = validate_h(cfg)
    for name in cfg.points:
        for c, color in enumerate(cfg.colors):
            direct = sum(t.members.count(name) for t in color)
            if direct != report.point_degrees[name][c]:
                return False
    return True


def run(spec: RunSpec, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr

    def mismatch(message: str) -> int:
        print(f"oracle mismatch: {message}", file=err)
        return EXIT_ORACLE_MISMATCH

    if spec.command == "validate":
        cfg = load_configuration(spec.inputs[0])
        weight = parse_weight(spec.weight) if spec.weight else None
        report = validate_h(cfg, weight)
        out.write(_render_report(report))
        if spec.use_oracle and not _recount_degrees(cfg):
            return mismatch("degree recount disagrees with the report")
        return EXIT_OK if report.h_valid else EXIT_NEGATIVE

    if spec.command == "invariant":
        cfg = load_configuration(spec.inputs[0])
        value = eves_invariant(cfg)
        out.write(f"E_p = {value.point}\n")
        if spec.use_oracle and not _oracle_invariant_matches(cfg):
            return mismatch("brute-force invariant differs")
        return EXIT_OK

    if spec.command == "reconstruct":
        cfg = load_configuration(spec.inputs[0])
        vector = reconstruct.reconstruction_vector(cfg)
        full = eves_invariant(cfg).point
        identity_ok = reconstruct.check_reconstruction_identity(cfg)
        out.write(reconstruct.render_reconstruction(vector, full, identity_ok))
        if spec.use_oracle:
            for (i, j), entry in zip(vector.pairs, vector.entries):
                expansion = reconstruct.unit_weight_expansion(
                    reconstruct.restrict_pair(cfg, i, j)
                )
                if not wps_equivalent(entry, oracle.brute_invariant(expansion).point):
                    return mismatch(f"brute-force entry ({i},{j}) differs")
            if not _oracle_invariant_matches(cfg):
                return mismatch("brute-force invariant differs")
        return EXIT_OK if identity_ok else EXIT_NEGATIVE

    if spec.command == "compare":
        cfg_a = load_configuration(spec.inputs[0])
        cfg_b = load_configuration(spec.inputs[1])
        report = reconstruct.compare(cfg_a, cfg_b)
        out.write(reconstruct.render_compare(report))
        if spec.use_oracle:
            brute_ep = wps_equivalent(
                oracle.brute_invariant(cfg_a).point, oracle.brute_invariant(cfg_b).point
            )
            if brute_ep != report.ep_equivalent:
                return mismatch("brute-force equivalence verdict differs")
        if report.ep_equivalent:
            return EXIT_OK
        return EXIT_NEGATIVE if report.reconstruction_equal else EXIT_DISTINGUISHABLE

    if spec.command == "transform":
        cfg = load_configuration(spec.inputs[0])
        morphism = _load_matrix(spec.matrix)
        image = apply_morphism(cfg, morphism)
        out.write(configuration_to_json(image))
        if spec.use_oracle and not _oracle_invariant_matches(image):
            return mismatch("brute-force invariant of the image differs")
        return EXIT_OK

    if spec.command == "wps-equiv":
        weight = parse_weight(spec.weight)
        z = _parse_point(weight, spec.point_a)
        w = _parse_point(weight, spec.point_b)
        verdict = wps_equivalent(z, w)
        out.write("true\n" if verdict else "false\n")
        if spec.use_oracle:
            brute = oracle.bounded_lambda_search(z, w, oracle.SearchBound())
            if brute != verdict:
                return mismatch("bounded scalar search verdict differs")
        return EXIT_OK if verdict else EXIT_NEGATIVE

    if spec.command == "witness":
        weight = parse_weight(spec.weight)
        z, w = nonreconstructible_witness(weight)
        out.write(f"{z}\n{w}\n")
        if spec.use_oracle:
            images_equal = all(
                wps_equivalent(a, b) for a, b in zip(product_map(z), product_map(w))
            )
            found = oracle.bounded_lambda_search(z, w, oracle.SearchBound())
            if not images_equal or found:
                return mismatch("witness pair fails the brute-force checks")
        return EXIT_OK

    raise ValueError(f"unknown command {spec.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    spec = _spec_from_args(args)
    try:
        return run(spec)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
