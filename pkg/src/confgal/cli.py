"""Command-line front end: one verb per verification, one report per run.

Exit status is 0 when every check passes, 1 when any fails and 2 on a
usage error (including unparseable rationals, which name their flag).
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import HalfInteger, check_jacobi, make_algebra, sl2_algebra
from .fock import check_highest_n, d_module_report, fock_relations_report, realization_for
from .oracle import verma_character_oracle
from .report import Report
from .representations import (
    DEFAULT_DEPTH,
    MAX_DEPTH,
    HighestWeightData,
    check_theorem2,
    check_theorem3,
    radical_dims,
    verma,
)
from .uea import check_engine, check_phi, check_theta, theta_points


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _half_integer(text: str) -> HalfInteger:
    try:
        l = HalfInteger.parse(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a half-integer: {text!r}") from None
    if l.twice <= 0:
        raise argparse.ArgumentTypeError(f"l must be positive, got {text!r}")
    return l


def _depth(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= n <= MAX_DEPTH:
        raise argparse.ArgumentTypeError(f"depth must lie in [0, {MAX_DEPTH}], got {n}")
    return n


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {n}")
    return n


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(part) for part in text.split(",") if part.strip()]


# argparse only recognizes decimals as negative numbers; accept "-5/2" too.
_NEGATIVE = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="confgal", description="Exact checks for conformal Galilei algebras.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp._negative_number_matcher = _NEGATIVE
        sp.add_argument("--format", choices=("json", "csv", "table"), default="json")
        sp.add_argument("--seed", type=int, default=0)
        return sp

    sp = verb("verify-algebra", "antisymmetry, Jacobi, grading and engine integrity")
    sp.add_argument("--l", type=_half_integer, required=True)
    sp.add_argument("--family", choices=("extended", "centerless", "heisenberg", "sl2", "both"), default="both")
    sp.add_argument("--triples", type=_nonneg, default=100)

    sp = verb("verify-phi", "oscillator homomorphism relations")
    sp.add_argument("--l", type=_half_integer, required=True)

    sp = verb("verify-theta", "automorphism family of the f-localization")
    sp.add_argument("--l", type=_half_integer, required=True)
    sp.add_argument("--points", type=_rational_list, default=None, help="comma list of sample points")

    for name, help in (("character", "Verma character vs the partition oracle"), ("radical", "radical and simple quotient of a Verma module")):
        sp = verb(name, help)
        sp.add_argument("--l", type=_half_integer, required=True)
        sp.add_argument("--family", choices=("extended", "centerless", "heisenberg", "sl2"), default="extended")
        sp.add_argument("--hw", type=_rational, default=None)
        sp.add_argument("--z", type=_rational, default=None)
        sp.add_argument("--pl", type=_rational, default=None)
        sp.add_argument("--depth", type=_depth, default=DEFAULT_DEPTH)

    sp = verb("check-theorem2", "Verma characters, radical onset and simple quotients")
    sp.add_argument("--l", type=_half_integer, required=True)
    sp.add_argument("--z", type=_rational, default=Fraction(1))
    sp.add_argument("--hw", type=_rational, required=True)
    sp.add_argument("--depth", type=_depth, default=12)

    sp = verb("check-theorem3", "simplicity of Fock (x) V(m) at truncation")
    sp.add_argument("--l", type=_half_integer, required=True)
    sp.add_argument("--z", type=_rational, default=Fraction(1))
    sp.add_argument("--m", type=_nonneg, required=True)
    sp.add_argument("--depth", type=_depth, default=8)

    sp = verb("check-highestN", "simple highest-weight modules of the centerless algebra")
    sp.add_argument("--l", type=_half_integer, required=True)
    sp.add_argument("--pl", type=_rational, required=True)
    sp.add_argument("--hw", type=_rational, required=True)
    sp.add_argument("--depth", type=_depth, default=8)
    sp.add_argument("--rescale", action="store_true", help="scale the F_1 operators by pl / l!")

    sp = verb("fock-relations", "bracket relations of an explicit realization")
    sp.add_argument("--example", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--l", type=_half_integer, required=True)
    sp.add_argument("--z", type=_rational, default=Fraction(1))
    sp.add_argument("--mu", type=_rational_list, default=None, help="comma list; drawn from --seed if absent")
    sp.add_argument("--window", type=_nonneg, default=8)

    sp = verb("d-module", "the Laurent module D(a, z)")
    sp.add_argument("--a", type=_rational, required=True)
    sp.add_argument("--z", type=_rational, default=Fraction(1))
    sp.add_argument("--window", type=_nonneg, default=10)
    sp.add_argument("--expect-simple", action="store_true")
    return parser


# -- verbs ------------------------------------------------------------------------------


def _verify_algebra(args) -> Report:
    families = ("extended", "centerless") if args.family == "both" else (args.family,)
    report = Report("verify-algebra", {"l": args.l, "family": args.family, "seed": args.seed, "triples": args.triples})
    built = 0
    for fam in families:
        try:
            alg = make_algebra(args.l, fam)
        except ValueError:
            if args.family == "both":
                continue  # the extended family needs half-odd l
            raise
        built += 1
        report.extend(check_jacobi(alg), prefix=f"{alg.name}:")
        report.extend(check_engine(alg, args.triples, seed=args.seed), prefix=f"{alg.name}:")
    if not built:
        raise UsageError(f"no algebra in {families} exists at l={args.l}")
    return report


def _verify_phi(args) -> Report:
    report = check_phi(args.l)
    report.params.update({"l": args.l})
    return report


def _verify_theta(args) -> Report:
    xs = args.points if args.points is not None else theta_points(args.l, args.seed)
    return check_theta(args.l, xs, seed=args.seed)


def _highest_weight(args) -> HighestWeightData:
    fam, l = args.family, args.l
    if fam == "extended":
        if args.hw is None or args.z is None:
            raise UsageError("--hw and --z are required for the extended family")
        return HighestWeightData(fam, args.hw, args.z)
    if fam == "heisenberg":
        if args.z is None:
            raise UsageError("--z is required for the Heisenberg family")
        return HighestWeightData(fam, None, args.z)
    if args.hw is None:
        raise UsageError("--hw is required")
    if fam == "centerless" and l.is_integer:
        if args.pl is None:
            raise UsageError("--pl is required for the centerless family at integer l")
        return HighestWeightData(fam, args.hw, args.pl)
    return HighestWeightData(fam, args.hw)


def _verma_for(args):
    alg = make_algebra(args.l, args.family) if args.family != "sl2" else sl2_algebra()
    return verma(alg, _highest_weight(args), args.depth)


def _params(args, *names: str) -> dict:
    return {n: getattr(args, n) for n in names if getattr(args, n) is not None}


def _character(args) -> Report:
    V = _verma_for(args)
    report = Report("character", _params(args, "l", "family", "hw", "z", "pl", "depth"))
    oracle = verma_character_oracle(args.family, args.l.value, args.depth)
    report.add("verma=oracle", V.dims == oracle.dims, f"{V.dims} vs {oracle.dims}")
    ch = V.character()
    report.data = {"top_weight": ch.top_weight, "step": ch.step, "dims": list(ch.dims)}
    return report


def _radical(args) -> Report:
    V = _verma_for(args)
    rad = radical_dims(V)
    report = Report("radical", _params(args, "l", "family", "hw", "z", "pl", "depth"))
    report.add("radical<=verma", all(r <= d for r, d in zip(rad, V.dims)), None)
    report.add("top-not-in-radical", rad[0] == 0, f"radical at depth 0: {rad[0]}")
    report.data = {"verma": list(V.dims), "radical": rad, "simple": [d - r for d, r in zip(V.dims, rad)]}
    return report


def _theorem2(args) -> Report:
    return check_theorem2(args.l, args.z, args.hw, args.depth)


def _theorem3(args) -> Report:
    return check_theorem3(args.l, args.z, args.m, args.depth)


def _highest_n(args) -> Report:
    return check_highest_n(args.l, args.pl, args.hw, args.depth, args.rescale)


def _fock_relations(args) -> Report:
    r = realization_for(args.example, args.l, args.z, args.mu, args.seed)
    report = fock_relations_report(r, args.window)
    report.params.update({"example": args.example, "seed": args.seed})
    return report


def _d_module(args) -> Report:
    return d_module_report(args.a, args.z, args.window, args.expect_simple)


VERBS: dict[str, Callable[[argparse.Namespace], Report]] = {
    "verify-algebra": _verify_algebra,
    "verify-phi": _verify_phi,
    "verify-theta": _verify_theta,
    "character": _character,
    "radical": _radical,
    "check-theorem2": _theorem2,
    "check-theorem3": _theorem3,
    "check-highestN": _highest_n,
    "fock-relations": _fock_relations,
    "d-module": _d_module,
}


# -- output ------------------------------------------------------------------------------


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "table":
        return str(report)
    if report.command == "character" and report.data:
        rows = ["n,dim"] + [f"{n},{d}" for n, d in enumerate(report.data["dims"])]
    else:
        rows = ["name,pass,witness"]
        for r in sorted(report.results, key=lambda r: r.name):
            witness = (r.witness or "").replace('"', '""')
            rows.append(f'{r.name},{str(r.passed).lower()},"{witness}"')
    return "\n".join(rows)


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = VERBS[args.verb](args)
    except (UsageError, ValueError) as exc:
        print(f"confgal {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    print(render(report, args.format), file=out)
    return 0 if report.passed else 1


def main() -> None:
    sys.exit(run())
