"""Command-line front end.

Subcommands: classify, homology, fibration, witness, snf, fibersum.
Every report is available as key/value text (default) or JSON with a
stable schema; identical inputs produce byte-identical output.  Exit
codes: 0 success or aspherical, 2 usage or parse error, 3 not
aspherical or a failed construction precondition.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import abhomology, asphericity, fibersum, lefschetz, zlinalg
from .fpgroup import parse_presentation, render_presentation
from .zlinalg import FgAbelian

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERDICT = 3

_CITATIONS = {
    asphericity.Reason.IS_Z2: ("Theorem 1.2",),
    asphericity.Reason.RANK_AT_LEAST_4: ("Theorem 1.2", "Corollary 5.2"),
    asphericity.Reason.RANK_ZERO_OR_ONE: ("[IKRT] (external input)",),
    asphericity.Reason.RANK_TWO_WITH_TORSION: ("Theorem 1.2",),
    asphericity.Reason.RANK_THREE: ("Example 1.3",),
}


class GroupSpecError(ValueError):
    pass


def parse_group_spec(text: str) -> FgAbelian:
    """`Z^r`, `Z`, `Z/d` and `0`, joined by `+`; normalized to a divisor chain."""
    text = text.strip()
    if not text:
        raise GroupSpecError("empty group spec")
    if text == "0":
        return FgAbelian(0)
    orders: list[int] = []
    for term in text.split("+"):
        term = term.strip()
        if term == "Z":
            orders.append(0)
        elif term.startswith("Z^"):
            try:
                r = int(term[2:])
            except ValueError:
                raise GroupSpecError(f"bad free part {term!r}") from None
            if r < 0:
                raise GroupSpecError(f"negative free rank in {term!r}")
            orders.extend([0] * r)
        elif term.startswith("Z/"):
            try:
                d = int(term[2:])
            except ValueError:
                raise GroupSpecError(f"bad torsion part {term!r}") from None
            if d < 1:
                raise GroupSpecError(f"torsion order must be positive in {term!r}")
            orders.append(d)
        else:
            raise GroupSpecError(f"cannot parse term {term!r}")
    return FgAbelian.from_cyclic_orders(orders)


_GRADED_KEY = re.compile(r"H_\d+\Z")


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
        return
    for key, value in payload.items():
        if key in ("schema_version", "command"):
            continue
        if _GRADED_KEY.match(key):
            print(f"{key} = {value}")
        elif isinstance(value, bool):
            print(f"{key}: {'true' if value else 'false'}")
        elif isinstance(value, (list, tuple)):
            print(f"{key}: {'; '.join(str(v) for v in value) if value else '-'}")
        elif value is None:
            print(f"{key}: -")
        elif isinstance(value, str) and "\n" in value:
            print(f"{key}:")
            print(value.rstrip("\n"))
        else:
            print(f"{key}: {value}")


def cmd_classify(args: argparse.Namespace) -> int:
    gamma = parse_group_spec(args.group)
    verdict = asphericity.classify(gamma)
    citations = list(_CITATIONS[verdict.reason])
    if verdict.pi2_forced_nonzero_in_dim4:
        citations.append("Proposition 5.3")
    if gamma == FgAbelian(4, (2,)):
        citations.append("Corollary 5.5")
    note = asphericity.covering_note(gamma)
    if note is not None:
        citations.append("Corollary 5.4")
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "classify",
        "group": gamma.render(),
        "aspherical": verdict.aspherical,
        "reason": verdict.reason.value,
        "realizable_dims": sorted(verdict.realizable_dims),
        "pi2_forced_nonzero_in_dim4": verdict.pi2_forced_nonzero_in_dim4,
        "class_note": verdict.class_note,
        "covering_note": note,
        "citations": citations,
    }
    _emit(payload, args.format)
    return EXIT_OK if verdict.aspherical else EXIT_VERDICT


def cmd_homology(args: argparse.Namespace) -> int:
    gamma = parse_group_spec(args.group)
    degree = args.degree if args.degree is not None else args.max_degree
    if not 0 <= degree <= abhomology.DEFAULT_DEGREE_CAP:
        raise GroupSpecError(
            f"max degree must be between 0 and {abhomology.DEFAULT_DEGREE_CAP}"
        )
    graded = abhomology.group_homology_graded(gamma, max_degree=degree)
    summand = abhomology.factor_homology_sum(gamma, degree)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "homology",
        "group": gamma.render(),
        "max_degree": degree,
    }
    for k, h in enumerate(graded.groups):
        payload[f"H_{k}"] = h.render()
    for k in range(degree + 1):
        payload[f"dim_R_H^{k}"] = abhomology.real_cohomology_rank(gamma, k)
    payload[f"factor_homology_sum_H_{degree}"] = summand.render()
    payload["contains_factor_homology_sum"] = graded.groups[degree].contains_summand(summand)
    _emit(payload, args.format)
    return EXIT_OK


def cmd_fibration(args: argparse.Namespace) -> int:
    path = Path(args.file)
    if not path.exists():
        print(f"error: no such file: {path}", file=sys.stderr)
        return EXIT_USAGE
    m, label = lefschetz.parse_factorization(path.read_text())
    p = lefschetz.total_space_pi1(m)
    trivial = lefschetz.homology_trivial(m)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "fibration",
        "fibration": label,
        "fiber_genus": m.fiber_genus,
        "cycles": len(m.cycles),
        "euler_characteristic": lefschetz.euler_characteristic(m),
        "homology_trivial": trivial,
        "homology_trivial_note": "homological check only; not sufficient for isotopy",
        "abelianization": zlinalg.abelianization(p).render(),
        "pi1_presentation": render_presentation(p),
    }
    _emit(payload, args.format)
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    gamma = parse_group_spec(args.group)
    try:
        p = fibersum.witness_presentation(gamma)
    except fibersum.NotAspherical as e:
        verdict = asphericity.classify(gamma)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "witness",
            "group": gamma.render(),
            "aspherical": False,
            "reason": verdict.reason.value,
            "error": str(e),
        }
        _emit(payload, args.format)
        return EXIT_VERDICT
    ab = zlinalg.abelianization(p)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "witness",
        "group": gamma.render(),
        "aspherical": True,
        "abelianization": ab.render(),
        "rank": zlinalg.rank(ab),
        "abelianization_check": "PASS" if ab == gamma else "FAIL",
        "verdict": "symplectically aspherical (Theorem 1.2; witness via Corollary 4.6)",
        "presentation": render_presentation(p),
    }
    _emit(payload, args.format)
    return EXIT_OK


def cmd_snf(args: argparse.Namespace) -> int:
    path = Path(args.file)
    if not path.exists():
        print(f"error: no such file: {path}", file=sys.stderr)
        return EXIT_USAGE
    a = zlinalg.parse_matrix(path.read_text())
    snf = zlinalg.smith_normal_form(a)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "snf",
        "rows": a.rows,
        "cols": a.cols,
        "D": snf.d.render(),
        "U": snf.u.render(),
        "V": snf.v.render(),
        "cokernel": zlinalg.cokernel(a).render(),
    }
    _emit(payload, args.format)
    return EXIT_OK


def cmd_fibersum(args: argparse.Namespace) -> int:
    path = Path(args.file)
    if not path.exists():
        print(f"error: no such file: {path}", file=sys.stderr)
        return EXIT_USAGE
    p = parse_presentation(path.read_text())
    fibered = fibersum.SurfaceFiberedPresentation(len(p.generators) // 2, p)
    result = fibersum.fiber_sum_with_trivial_bundle(fibered, args.base_genus)
    ab = zlinalg.abelianization(result)
    expected = zlinalg.abelianization(p).direct_sum(FgAbelian(2 * args.base_genus))
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "fibersum",
        "fiber_genus": fibered.fiber_genus,
        "base_genus": args.base_genus,
        "abelianization": ab.render(),
        "expected_abelianization": expected.render(),
        "abelianization_check": "PASS" if ab == expected else "FAIL",
        "presentation": render_presentation(result),
    }
    _emit(payload, args.format)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspherical",
        description="Symplectically aspherical abelian groups: classification, "
        "homology, Lefschetz fibration presentations and witnesses.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--max-degree",
        type=int,
        default=3,
        help="default top homology degree for reports (at most 8)",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("classify", help="decide symplectic asphericity of an abelian group")
    p.add_argument("group", help="group spec, e.g. Z^4+Z/2")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("homology", help="integral homology and real cohomology ranks")
    p.add_argument("group")
    p.add_argument("degree", nargs="?", type=int, default=None)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("fibration", help="report on a monodromy factorization file")
    p.add_argument("file")
    p.set_defaults(func=cmd_fibration)

    p = sub.add_parser("witness", help="emit a witness presentation for an aspherical group")
    p.add_argument("group")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("snf", help="Smith normal form of a matrix file")
    p.add_argument("file")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("fibersum", help="fiber sum of a fibered presentation with a trivial bundle")
    p.add_argument("file", help="presentation file in surface-fibered form")
    p.add_argument("-e", "--base-genus", type=int, default=1)
    p.set_defaults(func=cmd_fibersum)

    return parser


_DOMAIN_ERRORS = (
    fibersum.NotAspherical,
    fibersum.NotSurjective,
    fibersum.NotSurfaceFibered,
    fibersum.RankTooSmall,
    fibersum.InvalidGenus,
)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERDICT
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
