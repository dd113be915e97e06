"""Closed-form limit cycle for a deck of n cards with pile size L."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .balance import format_fraction, gamma_at
from .dynamics import step
from .errors import InconsistentTotal, InternalInconsistency
from .farey import index_to_fraction
from .partition import AustrianPartition


@dataclass(frozen=True)
class CyclePrediction:
    n: int
    L: int
    fraction: Fraction
    min_bank_state: AustrianPartition
    cycle_states: tuple[AustrianPartition, ...]

    @property
    def period(self) -> int:
        return self.fraction.denominator

    def to_json(self) -> dict:
        return {
            "fraction": format_fraction(self.fraction),
            "period": self.period,
            "min_bank_state": self.min_bank_state.to_json(),
            "cycle": [s.to_json() for s in self.cycle_states],
        }


def min_bank_partition(f: Fraction, L: int, n: int, offset: int) -> AustrianPartition:
    """The cycle state with the smallest bank.

    Parts of size ``m`` occur ``gamma_{L-m}`` times, where gamma is the
    maximal balanced word of density ``f``; the bank is ``offset``.
    """
    p = f.denominator
    if p > L:
        raise ValueError(f"denominator {p} exceeds L={L}")
    if not 0 <= offset < L // p:
        raise ValueError(f"offset {offset} outside [0, {L // p})")
    freq = tuple(gamma_at(f, L - m) for m in range(1, L + 1))
    state = AustrianPartition(L, offset, freq)
    if state.total != n:
        raise InconsistentTotal(f"{state} totals {state.total}, expected {n}")
    return state


def predict_cycle(n: int, L: int) -> CyclePrediction:
    f, offset = index_to_fraction(n, L)
    start = min_bank_partition(f, L, n, offset)
    states = [start]
    for _ in range(f.denominator - 1):
        states.append(step(states[-1]))
    if step(states[-1]) != start or len(set(states)) != len(states):
        raise InternalInconsistency(
            f"orbit of {start} does not close after exactly {f.denominator} steps"
        )
    return CyclePrediction(n, L, f, start, tuple(states))
