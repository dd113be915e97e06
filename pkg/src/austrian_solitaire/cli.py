"""Command-line entry point: ``austrian-solitaire <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import balance, explorer, farey
from .balance import PeriodicSequence, format_fraction, parse_fraction
from .dynamics import find_cycle, normalize
from .errors import AustrianError, NegativeValue, ParseError
from .partition import GeneralPartition
from .predictor import predict_cycle

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2

_TOKEN = re.compile(r"\s*(?:(-?\d+)|(\S))")


def parse_state_literal(text: str, L: int) -> GeneralPartition:
    """Parse ``"(bank; p1,p2,...)"``, the notation used for states throughout."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            if m.group(1).startswith("-"):
                raise NegativeValue(f"negative value {m.group(1)}", m.start(1))
            tokens.append(("int", int(m.group(1)), m.start(1)))
        else:
            tokens.append(("sym", m.group(2), m.start(2)))
        pos = m.end()
    tokens.append(("end", None, len(text)))

    it = iter(tokens)
    tok = next(it)

    def expect(kind, value=None):
        nonlocal tok
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value is not None else "an integer"
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, got {got}", tok[2])
        current = tok
        tok = next(it, tok)
        return current

    expect("sym", "(")
    bank = expect("int")[1]
    expect("sym", ";")
    parts = []
    if tok[0] == "int":
        parts.append(expect("int"))
        while tok[:2] == ("sym", ","):
            expect("sym", ",")
            parts.append(expect("int"))
    expect("sym", ")")
    expect("end")
    for _, value, position in parts:
        if value == 0:
            raise ParseError("parts must be positive", position)
    return GeneralPartition(L, bank, tuple(value for _, value, _ in parts))


def _range(text: str) -> range:
    """``"a:b"`` inclusive, or a single integer."""
    lo, sep, hi = text.partition(":")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected a:b") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="austrian-solitaire", description=__doc__)
    parser.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="iterate a starting state to its cycle")
    p.add_argument("state", help='state literal such as "(0; 5,5,4,3,2,2,1)"')
    p.add_argument("--L", type=int, required=True, dest="L")
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("predict", help="closed-form cycle for n cards and pile size L")
    p.add_argument("n", type=int)
    p.add_argument("L", type=int)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("verify", help="check every state of (n, L) reaches one cycle")
    p.add_argument("n", type=int)
    p.add_argument("L", type=int)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("sweep", help="verify a grid of (n, L) cells, CSV output")
    p.add_argument("--n", type=_range, default=range(0, 61), dest="n_range", metavar="A:B")
    p.add_argument("--L", type=_range, default=range(1, 7), dest="L_range", metavar="A:B")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["csv"], default="csv")

    p = sub.add_parser("farey", help="list the full Farey sequence")
    p.add_argument("L", type=int)
    p.add_argument("count", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("partial-sums", help="partial sums of a periodic word with rational bounds")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word", help="one period, comma separated, e.g. 2,1,1")
    src.add_argument("--fraction", help="use the maximal balanced word of q/p")
    p.add_argument("--k-max", type=int, default=None, help="default: three periods")
    p.add_argument("--format", choices=["csv"], default="csv")

    p = sub.add_parser("graph", help="DOT digraph of the state space")
    p.add_argument("n", type=int)
    p.add_argument("L", type=int)
    p.add_argument("--cap", type=int, default=explorer.DEFAULT_NODE_CAP)
    p.add_argument("--format", choices=["dot"], default="dot")
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _simulate(args, out):
    start, pre_steps = normalize(parse_state_literal(args.state, args.L))
    report = find_cycle(start)
    if args.format == "json":
        doc = report.to_json()
        doc["normalization_steps"] = pre_steps
        out.write(_dump(doc))
    else:
        out.write(f"start {start} (after {pre_steps} normalization steps)\n")
        out.write(f"transient {report.transient_length}\nperiod {report.period}\n")
        out.writelines(f"{s}\n" for s in report.cycle_states)
    return EXIT_OK


def _predict(args, out):
    pred = predict_cycle(args.n, args.L)
    if args.format == "json":
        out.write(_dump(pred.to_json()))
    else:
        out.write(f"fraction {format_fraction(pred.fraction)}\nperiod {pred.period}\n")
        out.write(f"min_bank_state {pred.min_bank_state}\n")
        out.writelines(f"{s}\n" for s in pred.cycle_states)
    return EXIT_OK


def _verify(args, out):
    report = explorer.verify_connectivity(args.n, args.L)
    if args.format == "json":
        out.write(_dump(report.to_json()))
    else:
        out.write(
            f"n={report.n} L={report.L} states={report.state_count} "
            f"connected={str(report.connected).lower()} period={report.period} "
            f"fraction={format_fraction(report.fraction)} max_transient={report.max_transient}\n"
        )
    ok = report.connected and report.matches_prediction is not False
    return EXIT_OK if ok else EXIT_FALSIFIED


def _sweep(args, out):
    rows = explorer.write_sweep_csv(
        explorer.sweep(args.n_range, args.L_range, workers=args.workers), out)
    failed = [r for r in rows if r.report is not None and not r.ok]
    if failed:
        return EXIT_FALSIFIED
    if any(r.error for r in rows):
        return EXIT_USAGE
    return EXIT_OK


def _farey(args, out):
    entries = farey.full_farey(args.L, args.count)
    if args.format == "json":
        out.write(_dump([e.to_json() for e in entries]))
    else:
        out.writelines(f"{e}\n" for e in entries)
    return EXIT_OK


def _partial_sums(args, out):
    if args.word is not None:
        beta = PeriodicSequence(tuple(int(x) for x in args.word.split(",")))
    else:
        f = parse_fraction(args.fraction)
        beta = PeriodicSequence(tuple(balance.gamma(f, f.denominator)))
    q, p = beta.density.numerator, beta.density.denominator
    k_max = args.k_max or 3 * beta.period
    out.write("k,sum,lower_bound,upper_bound\n")
    for k, s in enumerate(balance.partial_sums(beta, k_max), start=1):
        out.write(f"{k},{s},{q * k // p},{balance.ceil_div(q * k, p)}\n")
    return EXIT_OK


def _graph(args, out):
    out.write(explorer.export_state_graph(args.n, args.L, cap=args.cap))
    return EXIT_OK


_COMMANDS = {
    "simulate": _simulate,
    "predict": _predict,
    "verify": _verify,
    "sweep": _sweep,
    "farey": _farey,
    "partial-sums": _partial_sums,
    "graph": _graph,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.output:
            with open(args.output, "w", newline="") as fh:
                return _COMMANDS[args.command](args, fh)
        return _COMMANDS[args.command](args, stdout)
    except (AustrianError, ValueError) as exc:
        stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
