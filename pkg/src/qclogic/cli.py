"""Command-line interface: ``qclogic {prob,eval,check,laws,gate-xcheck}``.

Exit codes: 0 success, 1 unexpected verdict or failed cross-check,
2 usage or formula parse error, 3 realization file error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .errors import ParseError, QCLError
from .gates import GateKind, GateSpec, apply_gate_kernel
from .laws import DEFAULT_BUDGET, run_suite
from .oracle import apply_dense_batch, matrix_for
from .quregister import random_amplitudes
from .semantics import Realization, consequence_at, evaluate, prob_of, search
from .syntax import format, parse

EXIT_OK, EXIT_UNEXPECTED, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3
XCHECK_TOL = 1e-12


class _InputError(Exception):
    pass


def _load_realization(path: str) -> Realization:
    try:
        with open(path) as fh:
            data = json.load(fh)
        return Realization.from_dict(data)
    except (OSError, json.JSONDecodeError, QCLError) as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _fmt_complex(z: complex) -> str:
    return f"{z.real:+.12g}{z.imag:+.12g}j"


def cmd_prob(args) -> int:
    f = parse(args.formula)
    r = _load_realization(args.real)
    print(f"{prob_of(f, r):.12g}")
    return EXIT_OK


def cmd_eval(args) -> int:
    f = parse(args.formula)
    r = _load_realization(args.real)
    q = evaluate(f, r)
    print(f"width {q.n_qubits}")
    if args.amps:
        for j, a in enumerate(q.amplitudes):
            print(f"{j:0{q.n_qubits}b} {_fmt_complex(a)}")
    return EXIT_OK


def cmd_check(args) -> int:
    left, right = parse(args.left), parse(args.right)
    shown = f"{format(left)} |= {format(right)}"
    if args.real is not None:
        v = consequence_at(left, right, _load_realization(args.real))
        status = "holds" if v.holds_at_sample else "fails"
        print(f"{shown}: {status} at realization")
        print(f"Prob(left)={v.prob_left:.12g} Prob(right)={v.prob_right:.12g} margin={v.margin:.12g}")
        return EXIT_OK
    res = search(left, right, args.budget, args.seed)
    cx = res.counterexample
    if cx is None:
        print(f"{shown}: UNREFUTED after {res.samples_used} realizations "
              f"(max margin {res.max_margin:.3e})")
    else:
        where = cx.source if cx.index is None else f"{cx.source} #{cx.index}"
        print(f"{shown}: REFUTED by {where}, margin {cx.margin:.12g}")
        print(cx.realization.to_json(sort_keys=True))
    return EXIT_OK


def cmd_laws(args) -> int:
    report = run_suite(args.budget, args.seed)
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK if report.passed else EXIT_UNEXPECTED


def gate_specs(max_width: int) -> list[GateSpec]:
    specs = []
    for w in range(1, max_width + 1):
        specs.append(GateSpec(GateKind.NOT, w))
        specs.append(GateSpec(GateKind.SQRT_NOT, w))
        for n in range(1, w - 1):
            specs.append(GateSpec(GateKind.TOFFOLI, n, w - 1 - n))
    return specs


def gate_xcheck(max_width: int = 8, trials: int = 200, seed: int = 0) -> list[tuple[GateSpec, float]]:
    """Max componentwise deviation between structured kernel and dense matrix
    for every gate instance up to ``max_width`` qubits."""
    rng = np.random.default_rng(seed)
    rows = []
    for spec in gate_specs(max_width):
        states = random_amplitudes(spec.width, rng, trials)
        dense = apply_dense_batch(matrix_for(spec), states)
        fast = apply_gate_kernel(spec, states)
        rows.append((spec, float(np.abs(dense - fast).max())))
    return rows


def cmd_gate_xcheck(args) -> int:
    rows = gate_xcheck(args.max_width, args.trials, args.seed)
    worst = max(dev for _, dev in rows)
    if args.json:
        print(json.dumps({
            "schema": 1,
            "engine_version": __version__,
            "seed": args.seed,
            "trials": args.trials,
            "max_width": args.max_width,
            "tolerance": XCHECK_TOL,
            "max_deviation": worst,
            "pass": worst <= XCHECK_TOL,
            "gates": [{"gate": str(s), "width": s.width, "max_deviation": d} for s, d in rows],
        }, indent=2))
    else:
        for spec, dev in rows:
            print(f"{str(spec):<18} width={spec.width:<2} max_dev={dev:.3e}")
        print(f"max deviation {worst:.3e} over {len(rows)} gates x {args.trials} trials: "
              f"{'PASS' if worst <= XCHECK_TOL else 'FAIL'}")
    return EXIT_OK if worst <= XCHECK_TOL else EXIT_UNEXPECTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qclogic", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"qclogic {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prob", help="probability-value of a formula")
    p.add_argument("formula")
    p.add_argument("--real", required=True, help="realization JSON file")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("eval", help="quregister meaning of a formula")
    p.add_argument("formula")
    p.add_argument("--real", required=True, help="realization JSON file")
    p.add_argument("--amps", action="store_true", help="print every amplitude")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="consequence at a realization, or counterexample search")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--real", help="realization JSON file")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("laws", help="run the built-in law suite")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("gate-xcheck", help="structured kernels vs dense matrices")
    p.add_argument("--max-width", type=int, default=8)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gate_xcheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", 1) < 1:
        parser.error("--budget must be at least 1")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except QCLError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
