"""Command-line interface: deterministic reports over model files.

    lgcone validate   <file>             structural validation report
    lgcone cohomology <file> [options]   Betti / Hodge / Bott-Chern / Aeppli
    lgcone cones      <file>             W, pseudo-effective and dual cones
    lgcone check      <file> [--seed N]  identities, duality, metric classes

Exit codes: 0 success, 2 parse or validation failure, 3 internal
inconsistency (an exact identity the library guarantees failed to hold).
Reports are byte-identical across runs for identical inputs and seed;
``--machine`` switches to flat ``key=value`` emission.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from fractions import Fraction

from .cohomology import CohomologyEngine
from .cones import (
    ConeMembership,
    ConeNotPolyhedral,
    NotLCK,
    is_balanced,
    is_gauduchon,
    is_strongly_gauduchon,
    lck_lee_form,
    lee_gauduchon_class,
    lg_cone,
    pseff_cone_in_dcH1,
)
from .exterior import Form, HermitianMetric
from .fileformat import FileValidationError, ParseError, parse

__all__ = ["main"]

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3


class InternalInconsistency(RuntimeError):
    """An exact identity that must always hold failed to hold."""


def _emit(pairs, machine: bool) -> None:
    sep = "=" if machine else ": "
    for key, value in pairs:
        sys.stdout.write(f"{key}{sep}{value}\n")


def _vector(v) -> str:
    return "(" + ", ".join(str(Fraction(c)) for c in v) + ")"


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


# -- subcommands ----------------------------------------------------------------


def cmd_validate(model, args) -> list:
    pairs = [
        ("algebra", model.name),
        ("dim", str(model.presentation.dim)),
        ("jacobi", "ok"),
        ("unimodular", "ok"),
        ("complex_structure", "integrable"),
    ]
    for label in sorted(model.metric_forms):
        pairs.append((f"metric.{label}", "positive-definite"))
    pairs.append(("status", "ok"))
    return pairs


def cmd_cohomology(model, args) -> list:
    engine = CohomologyEngine(model.structure)
    dim = model.presentation.dim
    n = engine.n
    pairs = [("algebra", model.name)]
    theory = args.theory

    def degrees():
        if args.degree is not None:
            return [args.degree]
        return list(range(dim + 1))

    def bidegrees():
        if args.bidegree is not None:
            return [args.bidegree]
        return [(p, q) for p in range(n + 1) for q in range(n + 1) if p + q <= dim]

    if theory in (None, "dr"):
        for k in degrees():
            pairs.append((f"de_rham.{k}", str(engine.de_rham(k).dim)))
    groups = {"dolbeault": engine.dolbeault, "bc": engine.bott_chern, "ae": engine.aeppli}
    names = {"dolbeault": "dolbeault", "bc": "bott_chern", "ae": "aeppli"}
    for key in ("dolbeault", "bc", "ae"):
        if theory in (None, key):
            for p, q in bidegrees():
                pairs.append((f"{names[key]}.{p}.{q}", str(groups[key](p, q).dim)))
    return pairs


def cmd_cones(model, args) -> list:
    engine = CohomologyEngine(model.structure)
    space = engine.lee_gauduchon_space()
    if not space.agree:
        raise InternalInconsistency(
            "the two constructions of the space W disagree"
        )
    pairs = [
        ("algebra", model.name),
        ("w.dim", str(space.dim)),
    ]
    pseff = pseff_cone_in_dcH1(engine)
    pairs.append(("pseff.ambient_dim", str(pseff.ambient_dim)))
    pairs.append(("pseff.kind", pseff.kind))
    if pseff.kind == "polyhedral":
        for i, ray in enumerate(pseff.rays):
            pairs.append((f"pseff.ray.{i}", _vector(ray)))
    try:
        cone = lg_cone(engine)
    except ConeNotPolyhedral:
        pairs.append(("lg.kind", "not-polyhedral"))
        return pairs
    pairs.append(("lg.kind", cone.kind))
    if cone.kind == "full":
        pairs.append(("lg.description", f"all of W (dimension {cone.w_dim})"))
    else:
        for i, row in enumerate(cone.facet_rows):
            pairs.append((f"lg.facet.{i}", _vector(row)))
        closure = cone.closure_cone()
        for i, ray in enumerate(closure.rays):
            pairs.append((f"lg.closure_ray.{i}", _vector(ray)))
    return pairs


def _random_form(rng, presentation, degree):
    coeffs = [
        Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        for _ in range(presentation.basis_size(degree))
    ]
    return Form.from_coeffs(presentation, degree, coeffs)


def _check_operator_identities(model, rng, samples: int) -> None:
    s = model.structure
    pres = model.presentation
    for _ in range(samples):
        k = rng.randint(0, pres.dim - 2)
        f = _random_form(rng, pres, k)
        if not f.d().d().is_zero:
            raise InternalInconsistency("d^2 != 0 on a random form")
        if not (f.d() - s.del_(f) - s.delbar(f)).is_zero:
            raise InternalInconsistency("d != del + delbar on a random form")
        if not s.del_(s.del_(f)).is_zero or not s.delbar(s.delbar(f)).is_zero:
            raise InternalInconsistency("del^2 or delbar^2 != 0 on a random form")
        from .exactla import GaussianRational

        lhs = s.dc(f).d()
        rhs = GaussianRational(0, 2) * s.del_(s.delbar(f))
        if not (lhs - rhs).is_zero:
            raise InternalInconsistency("d d^c != 2i del delbar on a random form")


def cmd_check(model, args) -> list:
    engine = CohomologyEngine(model.structure)
    n = engine.n
    pairs = [("algebra", model.name), ("seed", str(args.seed))]
    rng = random.Random(args.seed)

    _check_operator_identities(model, rng, samples=20)
    pairs.append(("operator_identities", "ok (20 random forms)"))

    report = engine.exact_sequence_report()
    if not report.ok:
        raise InternalInconsistency("low-degree exact sequence failed")
    pairs.append(("exact_sequence", "ok"))

    space = engine.lee_gauduchon_space()
    if not space.agree:
        raise InternalInconsistency("the two constructions of W disagree")
    pairs.append(("w_agreement", "ok"))
    pairs.append(("w.dim", str(space.dim)))

    for p in range(n + 1):
        for q in range(n + 1):
            engine.check_duality(engine.bott_chern(p, q), engine.aeppli(n - p, n - q))
    pairs.append(("duality", "ok"))

    try:
        cone = lg_cone(engine)
    except ConeNotPolyhedral:
        cone = None

    yn = {True: "yes", False: "no"}
    for label in sorted(model.metric_forms):
        metric = HermitianMetric(model.structure, model.metric_forms[label])
        gauduchon = is_gauduchon(metric)
        pairs.append((f"metric.{label}.gauduchon", yn[gauduchon]))
        pairs.append((f"metric.{label}.balanced", yn[is_balanced(metric)]))
        pairs.append(
            (f"metric.{label}.strongly_gauduchon", yn[is_strongly_gauduchon(metric)])
        )
        try:
            lck_lee_form(metric)
            pairs.append((f"metric.{label}.lck", "yes"))
        except NotLCK:
            pairs.append((f"metric.{label}.lck", "no"))
        if gauduchon:
            cls = lee_gauduchon_class(engine, metric)
            if cls.is_zero:
                pairs.append((f"metric.{label}.lg_class", "zero"))
            elif cone is not None:
                verdict = cone.contains_class(cls)
                if verdict is not ConeMembership.INTERIOR:
                    raise InternalInconsistency(
                        "a Gauduchon metric's class left the open cone"
                    )
                pairs.append((f"metric.{label}.lg_class", "interior"))
            else:
                pairs.append((f"metric.{label}.lg_class", "nonzero"))
    pairs.append(("status", "ok"))
    return pairs


# -- entry point -------------------------------------------------------------------


def _bidegree(text: str) -> tuple[int, int]:
    try:
        p, q = text.split(",")
        return int(p), int(q)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("expected p,q") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgcone",
        description="Invariant cohomology and cone reports for model files.",
    )
    parser.add_argument(
        "command", choices=["validate", "cohomology", "cones", "check"]
    )
    parser.add_argument("file", help="model file (see the package README)")
    parser.add_argument(
        "--theory",
        choices=["dr", "dolbeault", "bc", "ae"],
        help="restrict the cohomology report to one theory",
    )
    parser.add_argument(
        "--bidegree", type=_bidegree, help="restrict to one bidegree p,q"
    )
    parser.add_argument("--degree", type=int, help="restrict to one degree k")
    parser.add_argument(
        "--machine", action="store_true", help="flat key=value output"
    )
    parser.add_argument("--seed", type=int, default=0, help="sampling seed")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    env_seed = os.environ.get("LGCONE_SEED")
    if env_seed is not None:
        args.seed = int(env_seed)
    try:
        model = _load(args.file)
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except (ParseError, FileValidationError) as exc:
        sys.stderr.write(f"error: {args.file}: {exc}\n")
        return EXIT_INVALID
    handler = {
        "validate": cmd_validate,
        "cohomology": cmd_cohomology,
        "cones": cmd_cones,
        "check": cmd_check,
    }[args.command]
    try:
        pairs = handler(model, args)
    except InternalInconsistency as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return EXIT_INCONSISTENT
    _emit(pairs, args.machine)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
