"""Command line surface.

Every subcommand prints deterministic, machine-friendly text by default
and a common JSON envelope with --json.  Exit codes: 0 on success, 1 on a
domain error (message on stderr names the violated precondition), 2 on a
usage error; verify also exits 1 when any property fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import DomainError
from .partitions import format_partition, parse_partition
from .perm import format_permutation, parse_permutation
from .polyring import format_polynomial
from .pieri import (
    enumerate_monotone_paths,
    grassmannian_structure_constant,
    hook_expand,
    pieri_targets,
)
from .schubert import SchubertExpansion, monk_expand, product_oracle, schubert_poly
from .schur import lr_coefficient
from .verify import ALL_CHECKS, run_checks


def _expansion_lines(expansion: SchubertExpansion) -> list[str]:
    return [f"{format_permutation(w)} {c}" for w, c in expansion.items()]


def _emit(args, envelope: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(envelope, indent=2))
    else:
        for line in text_lines:
            print(line)


def _expansion_payload(kind: str, inputs: dict, expansion: SchubertExpansion) -> dict:
    return {
        "kind": kind,
        "inputs": inputs,
        "ambient": expansion.ambient,
        "expansion": expansion.to_records(),
    }


def _cmd_schubert(args) -> int:
    w = parse_permutation(args.perm)
    poly = schubert_poly(w)
    text = format_polynomial(poly)
    envelope = {
        "kind": "schubert",
        "inputs": {"perm": format_permutation(w)},
        "ambient": w.n,
        "polynomial": text,
    }
    _emit(args, envelope, [text])
    return 0


def _cmd_expand(args) -> int:
    w = parse_permutation(args.perm)
    v = parse_permutation(args.other)
    expansion = product_oracle(w, v)
    inputs = {"perm": format_permutation(w), "other": format_permutation(v)}
    _emit(args, _expansion_payload("expand", inputs, expansion), _expansion_lines(expansion))
    return 0


def _resolve_ambient(choice: str | None, n: int, m: int) -> int:
    """Default is the input degree (quotient-ring semantics); "auto" embeds
    to n + m so the full polynomial-ring expansion is visible."""
    if choice is None:
        return n
    if choice == "auto":
        return n + m
    try:
        value = int(choice)
    except ValueError:
        raise DomainError(f"--ambient must be an integer or 'auto', got {choice!r}") from None
    if value < n:
        raise DomainError(f"--ambient {value} is smaller than the input degree {n}")
    return value


def _cmd_monk(args) -> int:
    w = parse_permutation(args.perm)
    ambient = _resolve_ambient(args.ambient, w.n, 1)
    expansion = monk_expand(w, args.k, ambient)
    inputs = {"perm": format_permutation(w), "k": args.k}
    _emit(args, _expansion_payload("monk", inputs, expansion), _expansion_lines(expansion))
    return 0


def _cmd_pieri(args) -> int:
    w = parse_permutation(args.perm)
    ambient = _resolve_ambient(args.ambient, w.n, args.m)
    kind = "row" if args.kind == "row" else "column"
    targets = pieri_targets(w, args.k, args.m, kind, ambient)
    expansion = SchubertExpansion({u: 1 for u in targets}, ambient=ambient)
    inputs = {"perm": format_permutation(w), "k": args.k, "m": args.m, "kind": args.kind}
    _emit(args, _expansion_payload("pieri", inputs, expansion), _expansion_lines(expansion))
    return 0


def _cmd_hook(args) -> int:
    w = parse_permutation(args.perm)
    ambient = _resolve_ambient(args.ambient, w.n, args.p + args.q - 1)
    expansion = hook_expand(w, args.k, args.p, args.q, ambient)
    inputs = {"perm": format_permutation(w), "k": args.k, "p": args.p, "q": args.q}
    _emit(args, _expansion_payload("hook", inputs, expansion), _expansion_lines(expansion))
    return 0


def _cmd_paths(args) -> int:
    w = parse_permutation(args.perm)
    wp = parse_permutation(args.other)
    direction = "increasing" if args.dir == "inc" else "decreasing"
    paths = enumerate_monotone_paths(w, wp, args.k, direction)
    records = [p.to_record() for p in paths]
    lines = []
    for p in paths:
        chain = [format_permutation(p.start)] + [format_permutation(u) for u in p.intermediates()]
        steps = " ".join(f"({t.a},{t.b})" for t in p.steps)
        lines.append(f"steps: {steps or '-'} chain: {' '.join(chain)}")
    envelope = {
        "kind": "paths",
        "inputs": {
            "perm": format_permutation(w),
            "other": format_permutation(wp),
            "k": args.k,
            "dir": args.dir,
        },
        "ambient": max(w.n, wp.n),
        "paths": records,
    }
    _emit(args, envelope, lines)
    return 0


def _cmd_lr(args) -> int:
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    lam = parse_partition(args.lam)
    value = lr_coefficient(mu, nu, lam, args.k)
    envelope = {
        "kind": "lr",
        "inputs": {
            "mu": format_partition(mu),
            "nu": format_partition(nu),
            "lambda": format_partition(lam),
            "k": args.k,
        },
        "value": value,
    }
    _emit(args, envelope, [str(value)])
    return 0


def _cmd_constant(args) -> int:
    w = parse_permutation(args.perm)
    wp = parse_permutation(args.other)
    nu = parse_partition(args.nu)
    value = grassmannian_structure_constant(w, wp, args.k, nu)
    envelope = {
        "kind": "constant",
        "inputs": {
            "perm": format_permutation(w),
            "other": format_permutation(wp),
            "k": args.k,
            "nu": format_partition(nu),
        },
        "value": value,
    }
    _emit(args, envelope, [str(value)])
    return 0


def _cmd_verify(args) -> int:
    results = run_checks(max_n=args.max_n, names=args.only or None)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.name}: {r.detail}")
    passed = sum(r.passed for r in results)
    lines.append(f"passed {passed}/{len(results)}")
    envelope = {
        "kind": "verify",
        "inputs": {"max_n": args.max_n},
        "results": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
        "ok": passed == len(results),
    }
    _emit(args, envelope, lines)
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON envelope")

    ambient_opt = argparse.ArgumentParser(add_help=False)
    ambient_opt.add_argument(
        "--ambient",
        default=None,
        help="ambient degree N, or 'auto' for n + m (default: degree of the input)",
    )

    parser = argparse.ArgumentParser(
        prog="schubertcalc",
        description="Exact Schubert polynomial products via combinatorial rules and a polynomial oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schubert", parents=[common], help="print the Schubert polynomial of W")
    p.add_argument("perm")
    p.set_defaults(handler=_cmd_schubert)

    p = sub.add_parser("expand", parents=[common], help="expand the product of two Schubert classes")
    p.add_argument("perm")
    p.add_argument("other")
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("monk", parents=[common, ambient_opt], help="Monk's rule for W and column K")
    p.add_argument("perm")
    p.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_monk)

    p = sub.add_parser("pieri", parents=[common, ambient_opt], help="Pieri-type targets for W, K, M")
    p.add_argument("perm")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--kind", choices=["row", "col"], default="row")
    p.set_defaults(handler=_cmd_pieri)

    p = sub.add_parser("hook", parents=[common, ambient_opt], help="hook-shape rule for W, K, P, Q")
    p.add_argument("perm")
    p.add_argument("k", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(handler=_cmd_hook)

    p = sub.add_parser("paths", parents=[common], help="monotone k-Bruhat chains from W to W2")
    p.add_argument("perm")
    p.add_argument("other")
    p.add_argument("k", type=int)
    p.add_argument("--dir", choices=["inc", "dec"], default="inc")
    p.set_defaults(handler=_cmd_paths)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient of LAMBDA in MU * NU")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("lam", metavar="lambda")
    p.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_lr)

    p = sub.add_parser("constant", parents=[common], help="structure constant of W2 in W times the shape-NU class")
    p.add_argument("perm")
    p.add_argument("other")
    p.add_argument("k", type=int)
    p.add_argument("nu")
    p.set_defaults(handler=_cmd_constant)

    p = sub.add_parser("verify", parents=[common], help="run the bundled verification suites")
    p.add_argument("--max-n", type=int, default=4, dest="max_n")
    p.add_argument("--only", nargs="*", choices=[name for name, _ in ALL_CHECKS], default=None)
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
