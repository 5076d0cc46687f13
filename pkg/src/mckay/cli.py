"""``mckay`` command line.

Exit codes: 0 success, 2 parse error, 3 semantic error, 4 numerical
non-convergence, 5 internal invariant violation.
"""
from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from .core import adjacency, quiver_dot
from .errors import McKayError, SemanticError, SpecSyntaxError
from .exact import parse_rational
from .groups import GroupData, GroupSpec, build_group
from .quiver import FlowConfig, default_target, flow, orbit_point, quotient_analysis
from .report import build_report, cartan_section, dumps, eta_section, flow_payload, spectrum_payload

__all__ = ["main", "parse_spec", "parse_spec_text", "load_group"]

_KEYS = {"kind", "n", "r", "weights", "path"}


def parse_spec_text(text: str) -> GroupSpec:
    """Flat ``key=value`` tokens, whitespace or newline separated; ``#`` starts a comment."""
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        for token in line.split():
            key, sep, value = token.partition("=")
            if not sep or not key or not value:
                raise SpecSyntaxError(f"expected key=value, got {token!r}")
            if key not in _KEYS:
                raise SpecSyntaxError(f"unknown key {key!r}")
            if key in fields:
                raise SpecSyntaxError(f"duplicate key {key!r}")
            fields[key] = value
    if "kind" not in fields:
        raise SpecSyntaxError("missing key 'kind'")

    def integer(name: str) -> int | None:
        if name not in fields:
            return None
        try:
            return int(fields[name])
        except ValueError:
            raise SpecSyntaxError(f"{name} must be an integer") from None

    weights = None
    if "weights" in fields:
        try:
            weights = tuple(int(x) for x in fields["weights"].split(","))
        except ValueError:
            raise SpecSyntaxError("weights must be comma-separated integers") from None
    return GroupSpec(fields["kind"], n=integer("n"), r=integer("r"), weights=weights,
                     path=fields.get("path"))


def parse_spec(path: str | Path) -> GroupSpec:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecSyntaxError(f"cannot read spec {path}: {exc.strerror}") from None
    return parse_spec_text(text)


def load_group(arg: str) -> GroupData:
    """A spec file path, or the spec text itself when no such file exists."""
    p = Path(arg)
    if p.is_file():
        return build_group(parse_spec(p), base=p.parent)
    if "=" in arg:
        return build_group(parse_spec_text(arg))
    raise SpecSyntaxError(f"cannot read spec {arg}: no such file")


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def cmd_report(args) -> int:
    G = load_group(args.spec)
    report = build_report(G)
    out = Path(args.output)
    _write(out / "report.json", dumps(report))
    _write(out / "quiver.dot", quiver_dot(adjacency(G), G.name))
    print(f"wrote {out / 'report.json'} and {out / 'quiver.dot'}")
    return 0


def cmd_quiver(args) -> int:
    G = load_group(args.spec)
    text = quiver_dot(adjacency(G), G.name)
    if args.output:
        _write(Path(args.output), text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_eta(args) -> int:
    sys.stdout.write(dumps(eta_section(load_group(args.spec))))
    return 0


def cmd_cartan(args) -> int:
    sys.stdout.write(dumps(cartan_section(load_group(args.spec))))
    return 0


def cmd_spectrum(args) -> int:
    payload = spectrum_payload(args.n, args.cutoff)
    for row in payload["aggregated"]:
        print(f"{row['eigenvalue']}\t{row['multiplicity']}")
    if args.json:
        _write(Path(args.json), dumps(payload))
    return 0


def start_vector(n: int, seed: int | None) -> np.ndarray:
    """First basis vector, or a seeded random complex vector."""
    if seed is None:
        x = np.zeros(n, dtype=complex)
        x[0] = 1.0
        return x
    rng = np.random.default_rng(seed)
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def cmd_flow(args) -> int:
    G = load_group(args.spec)
    if G.embedding_dim not in (2, 3):
        raise SemanticError("wrong dimension")
    x = start_vector(G.embedding_dim, args.seed)
    p = orbit_point(G, x)
    target = default_target(p, args.target)
    cfg = FlowConfig(target=target, tol=args.tol, max_iters=args.max_iters,
                     initial_step=args.step, seed=args.seed or 0)
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    result = flow(p, cfg)
    with open(out / "flow.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "mu_error", "n_residual", "step"])
        for it, err, res, step in result.trace:
            writer.writerow([it, format(err, ".17g"), format(res, ".17g"), format(step, ".17g")])
    analysis = quotient_analysis(result.point, result.target)
    payload = flow_payload(result, analysis, x, 2 * G.embedding_dim)
    _write(out / "flow.json", dumps(payload))
    print(f"converged in {result.iterations} iterations; quotient dimension {analysis.dim}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mckay", description="McKay correspondence toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="full JSON report and DOT quiver")
    p.add_argument("spec")
    p.add_argument("-o", "--output", default=".", help="output directory")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("quiver", help="McKay quiver as Graphviz DOT")
    p.add_argument("spec")
    p.add_argument("--dot", action="store_true", help="emit DOT (the only format)")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("eta", help="eta table and chain identity")
    p.add_argument("spec")
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("cartan", help="extended, reduced and inverse Cartan matrices")
    p.add_argument("spec")
    p.set_defaults(func=cmd_cartan)

    p = sub.add_parser("spectrum", help="Dirac spectrum of S^(2n-1)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--cutoff", type=_rational_arg, required=True)
    p.add_argument("--json", help="also write the per-family breakdown here")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("flow", help="Kempf-Ness flow from an orbit point")
    p.add_argument("spec")
    p.add_argument("--target", type=float, help="scale s of the target s(1, ..., 1)")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, help="random orbit start instead of e_1")
    p.add_argument("--max-iters", type=int, default=10_000)
    p.add_argument("--step", type=float, default=0.1, help="initial step")
    p.add_argument("-o", "--output", default=".", help="output directory")
    p.set_defaults(func=cmd_flow)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except McKayError as exc:
        print(f"mckay: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:  # e.g. FlowConfig validation
        print(f"mckay: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
