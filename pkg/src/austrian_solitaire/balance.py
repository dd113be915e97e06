"""Periodic frequency words of cycles and balanced (maximally even) sequences.

Everything here is exact: rational ceilings and floors go through integer
division, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dynamics import CycleReport, step
from .errors import NotACycle, NotBalanced
from .partition import AustrianPartition


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def format_fraction(f: Fraction) -> str:
    # str(Fraction(3)) is "3"; the q/p form is kept even for integers
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


@dataclass(frozen=True)
class PeriodicSequence:
    """One period of a bi-infinite word ``beta_i = word[i mod period]``.

    The stored period is kept as given even when the word repeats
    internally; :meth:`minimal_period` exposes the reduced one.
    """

    word: tuple[int, ...]

    def __post_init__(self):
        if not self.word:
            raise ValueError("a periodic word needs at least one entry")
        if any(x < 0 for x in self.word):
            raise ValueError(f"negative entry in {self.word}")
        object.__setattr__(self, "word", tuple(self.word))

    @property
    def period(self) -> int:
        return len(self.word)

    def __getitem__(self, i: int) -> int:
        return self.word[i % len(self.word)]

    @property
    def weight(self) -> int:
        """Sum over one period."""
        return sum(self.word)

    @property
    def density(self) -> Fraction:
        return Fraction(self.weight, self.period)

    def shift(self, j: int = 1) -> PeriodicSequence:
        """``sigma^j``: the result satisfies ``out[i] == self[i - j]``."""
        p = self.period
        return PeriodicSequence(tuple(self[i - j] for i in range(p)))

    def minimal_period(self) -> int:
        p = self.period
        for d in range(1, p + 1):
            if p % d == 0 and all(self.word[i] == self.word[i % d] for i in range(p)):
                return d
        return p

    def reduced(self) -> PeriodicSequence:
        return PeriodicSequence(self.word[: self.minimal_period()])


def _check_closed(report: CycleReport):
    states = report.cycle_states
    if len(states) != report.period:
        raise NotACycle(f"{len(states)} states listed for period {report.period}")
    for i, s in enumerate(states):
        if step(s) != states[(i + 1) % len(states)]:
            raise NotACycle(f"state {i} does not step to state {(i + 1) % len(states)}")


def phi(report: CycleReport) -> PeriodicSequence:
    """Top-size pile counts read backwards around the cycle from its base state."""
    _check_closed(report)
    states = report.cycle_states
    p = len(states)
    return PeriodicSequence(tuple(states[-i % p].freq[-1] for i in range(p)))


@dataclass(frozen=True)
class Infeasible:
    """A word whose reconstructed bank falls outside ``[0, L)``."""

    bank: int

    def __bool__(self):
        return False


def phi_inverse(beta: PeriodicSequence, L: int, n: int) -> AustrianPartition | Infeasible:
    """Rebuild the state a word would encode for deck size ``n``.

    A feasible result only says the bank is in range; it does not show the
    state lies on a real cycle.
    """
    freq = tuple(beta[L - m] for m in range(1, L + 1))
    bank = n - sum(m * f for m, f in enumerate(freq, start=1))
    if not 0 <= bank < L:
        return Infeasible(bank)
    return AustrianPartition(L, bank, freq)


def gamma_at(f: Fraction, i: int) -> int:
    q, p = f.numerator, f.denominator
    return ceil_div(q * (i + 1), p) - ceil_div(q * i, p)


def gamma(f: Fraction, length: int) -> list[int]:
    """The maximal balanced word of density ``f``, entries 0..length-1."""
    return [gamma_at(f, i) for i in range(length)]


def partial_sums(beta: PeriodicSequence | Sequence[int], k_max: int) -> list[int]:
    if not isinstance(beta, PeriodicSequence):
        beta = PeriodicSequence(tuple(beta))
    out, acc = [], 0
    for i in range(k_max):
        acc += beta[i]
        out.append(acc)
    return out


def balanced_offset(beta: PeriodicSequence) -> int | None:
    """Smallest ``j`` with ``sigma^j beta`` equal to the maximal balanced word, else None."""
    p = beta.period
    target = gamma(beta.density, p)
    for j in range(p):
        if all(beta[i - j] == target[i] for i in range(p)):
            return j
    return None


def is_balanced(beta: PeriodicSequence) -> bool:
    return balanced_offset(beta) is not None


def maximal_rotation(beta: PeriodicSequence) -> PeriodicSequence:
    """The rotation whose partial sums dominate every other rotation."""
    if not is_balanced(beta):
        raise NotBalanced(f"{beta.word} is not balanced")
    p = beta.period
    rotations = [beta.shift(-j) for j in range(p)]
    sums = [partial_sums(r, p) for r in rotations]
    for r, s in zip(rotations, sums):
        if all(x >= y for other in sums for x, y in zip(s, other)):
            return r
    raise NotBalanced(f"no rotation of {beta.word} dominates the others")
