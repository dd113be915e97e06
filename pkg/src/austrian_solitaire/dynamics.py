"""The Austrian Solitaire map, its general-state extension, and cycle detection."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency
from .partition import AustrianPartition, GeneralPartition


def step(state: AustrianPartition) -> AustrianPartition:
    """Apply one round of the game.

    One card is drawn from every pile into the bank, as many full piles of
    ``L`` as the hand allows are formed, and the rest stays banked. In
    frequency form every count shifts down one size and the new top count
    is ``hand // L``.
    """
    L = state.L
    new_piles, bank = divmod(state.bank + sum(state.freq), L)
    return AustrianPartition._trusted(L, bank, state.freq[1:] + (new_piles,))


def step_general(g: GeneralPartition) -> GeneralPartition:
    new_piles, bank = divmod(g.bank + len(g.parts), g.L)
    parts = [g.L] * new_piles + [p - 1 for p in g.parts if p > 1]
    return GeneralPartition(g.L, bank, tuple(parts))


def normalize(g: GeneralPartition) -> tuple[AustrianPartition, int]:
    """Iterate the general step until the state is Austrian.

    Returns the Austrian state and the number of steps taken. Oversized
    piles lose a card each round and the bank is reduced below ``L`` after
    one round, so this ends within ``max(0, max(parts) - L) + 1`` steps.
    """
    steps = 0
    while not g.is_austrian():
        g = step_general(g)
        steps += 1
    return g.to_austrian(), steps


@dataclass(frozen=True)
class CycleReport:
    transient_length: int
    period: int
    cycle_states: tuple[AustrianPartition, ...]

    def rotated(self, k: int = 1) -> CycleReport:
        """The same cycle with its base state advanced ``k`` steps."""
        k %= self.period
        states = self.cycle_states[k:] + self.cycle_states[:k]
        return CycleReport(self.transient_length + k, self.period, states)

    def canonical(self) -> tuple[AustrianPartition, ...]:
        """Cycle states starting at the minimal-bank state."""
        start = self.cycle_states.index(cycle_min_bank_state(self))
        return self.cycle_states[start:] + self.cycle_states[:start]

    def to_json(self) -> dict:
        return {
            "transient": self.transient_length,
            "period": self.period,
            "cycle": [s.to_json() for s in self.cycle_states],
        }


def find_cycle(state: AustrianPartition) -> CycleReport:
    seen: dict[AustrianPartition, int] = {}
    trajectory = []
    while state not in seen:
        seen[state] = len(trajectory)
        trajectory.append(state)
        state = step(state)
    start = seen[state]
    cycle = tuple(trajectory[start:])
    return CycleReport(start, len(cycle), cycle)


def cycle_min_bank_state(report: CycleReport) -> AustrianPartition:
    banks = [s.bank for s in report.cycle_states]
    low = min(banks)
    if banks.count(low) != 1:
        raise InternalInconsistency(f"minimal bank {low} is shared by several cycle states")
    return report.cycle_states[banks.index(low)]
