"""Exhaustive verification that every state of a (n, L) game reaches one cycle."""

from __future__ import annotations

import csv
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, TextIO

from .balance import format_fraction, phi
from .dynamics import CycleReport, find_cycle, step
from .errors import TooLarge
from .partition import AustrianPartition, count_states, enumerate_all
from .predictor import predict_cycle

DEFAULT_NODE_CAP = 5000

SWEEP_FIELDS = [
    "n", "L", "state_count", "period", "fraction", "max_transient", "connected",
    "matches_prediction", "error",
]


def _state_key(s: AustrianPartition):
    return s.bank, s.freq


def _canonical(cycle: Iterable[AustrianPartition]) -> tuple[AustrianPartition, ...]:
    cycle = tuple(cycle)
    start = cycle.index(min(cycle, key=_state_key))
    return cycle[start:] + cycle[:start]


@dataclass(frozen=True)
class ConnectivityReport:
    n: int
    L: int
    state_count: int
    connected: bool
    canonical_cycle: tuple[AustrianPartition, ...]
    max_transient: int
    transient_histogram: dict[int, int]
    cycle_count: int = 1
    matches_prediction: bool | None = None

    @property
    def period(self) -> int:
        return len(self.canonical_cycle)

    @property
    def fraction(self) -> Fraction:
        return phi(CycleReport(0, self.period, self.canonical_cycle)).density

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "L": self.L,
            "state_count": self.state_count,
            "connected": self.connected,
            "cycle_count": self.cycle_count,
            "period": self.period,
            "fraction": format_fraction(self.fraction),
            "cycle": [s.to_json() for s in self.canonical_cycle],
            "max_transient": self.max_transient,
            "transient_histogram": {str(k): v for k, v in self.transient_histogram.items()},
            "matches_prediction": self.matches_prediction,
        }


def _walk_memoized(states: list[AustrianPartition]):
    """Transient length and cycle of every state in one pass over the functional graph."""
    successor: dict[AustrianPartition, AustrianPartition] = {}
    transient: dict[AustrianPartition, int] = {}
    cycle_of: dict[AustrianPartition, int] = {}
    cycles: list[tuple[AustrianPartition, ...]] = []

    def nxt(s):
        t = successor.get(s)
        if t is None:
            t = successor[s] = step(s)
        return t

    for s in states:
        if s in transient:
            continue
        path: list[AustrianPartition] = []
        on_path: dict[AustrianPartition, int] = {}
        cur = s
        while cur not in transient and cur not in on_path:
            on_path[cur] = len(path)
            path.append(cur)
            cur = nxt(cur)
        if cur in on_path:
            start = on_path[cur]
            cid = len(cycles)
            cycles.append(_canonical(path[start:]))
            for c in path[start:]:
                transient[c] = 0
                cycle_of[c] = cid
            path = path[:start]
            base = 0
        else:
            cid = cycle_of[cur]
            base = transient[cur]
        for i, c in enumerate(path):
            transient[c] = base + len(path) - i
            cycle_of[c] = cid
    return [transient[s] for s in states], [cycle_of[s] for s in states], cycles


def _walk_plain(states: list[AustrianPartition]):
    cycles: list[tuple[AustrianPartition, ...]] = []
    transients, ids = [], []
    for s in states:
        r = find_cycle(s)
        canon = _canonical(r.cycle_states)
        if canon not in cycles:
            cycles.append(canon)
        transients.append(r.transient_length)
        ids.append(cycles.index(canon))
    return transients, ids, cycles


def verify_connectivity(n: int, L: int, memoize: bool = True,
                        check_prediction: bool = True) -> ConnectivityReport:
    """Run every state of the game to its cycle and check they all agree."""
    states = list(enumerate_all(n, L))
    transients, _, cycles = (_walk_memoized if memoize else _walk_plain)(states)
    histogram = dict(sorted(Counter(transients).items()))
    canonical = cycles[0]
    matches = None
    if check_prediction:
        matches = predict_cycle(n, L).cycle_states == canonical
    return ConnectivityReport(
        n=n,
        L=L,
        state_count=len(states),
        connected=len(cycles) == 1,
        canonical_cycle=canonical,
        max_transient=max(transients),
        transient_histogram=histogram,
        cycle_count=len(cycles),
        matches_prediction=matches,
    )


@dataclass(frozen=True)
class SweepRow:
    n: int
    L: int
    report: ConnectivityReport | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return (self.report is not None and self.report.connected
                and self.report.matches_prediction is not False)

    def as_dict(self) -> dict:
        row = dict.fromkeys(SWEEP_FIELDS, "")
        row.update(n=self.n, L=self.L, error=self.error or "")
        r = self.report
        if r is not None:
            row.update(
                state_count=r.state_count,
                period=r.period,
                fraction=format_fraction(r.fraction),
                max_transient=r.max_transient,
                connected=str(r.connected).lower(),
                matches_prediction="" if r.matches_prediction is None
                else str(r.matches_prediction).lower(),
            )
        return row


def _sweep_cell(cell: tuple[int, int]) -> SweepRow:
    n, L = cell
    try:
        return SweepRow(n, L, verify_connectivity(n, L))
    except Exception as exc:  # recorded in the row; a sweep never aborts
        return SweepRow(n, L, error=f"{type(exc).__name__}: {exc}")


def sweep(n_values: Iterable[int], L_values: Iterable[int], workers: int = 1) -> Iterator[SweepRow]:
    """Verify every (n, L) cell, yielding rows ordered by L then n.

    With ``workers > 1`` cells run in separate processes; the output order
    does not depend on completion order.
    """
    cells = [(n, L) for L in L_values for n in n_values]
    if not cells:
        return
    if workers <= 1:
        yield from map(_sweep_cell, cells)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_sweep_cell, cells, chunksize=4)


def write_sweep_csv(rows: Iterable[SweepRow], out: TextIO) -> list[SweepRow]:
    writer = csv.DictWriter(out, fieldnames=SWEEP_FIELDS, lineterminator="\n")
    writer.writeheader()
    written = []
    for row in rows:
        writer.writerow(row.as_dict())
        written.append(row)
    return written


def export_state_graph(n: int, L: int, cap: int = DEFAULT_NODE_CAP) -> str:
    """DOT digraph of the whole state space; cycle states get a double outline."""
    size = count_states(n, L)
    if size > cap:
        raise TooLarge(f"{size} states exceed the node cap of {cap}")
    states = list(enumerate_all(n, L))
    _, _, cycles = _walk_memoized(states)
    on_cycle = {s for c in cycles for s in c}
    lines = [f'digraph "austrian_n{n}_L{L}" {{', "\tnode [shape=box];"]
    for s in states:
        attrs = f'label="{s}"'
        if s in on_cycle:
            attrs += ", peripheries=2, color=red"
        lines.append(f'\t"{s}" [{attrs}];')
    for s in states:
        lines.append(f'\t"{s}" -> "{step(s)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
