"""Austrian partitions: a bank deposit plus part frequencies for capacity L."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CapacityViolation


@dataclass(frozen=True)
class AustrianPartition:
    """Canonical state of the game.

    ``freq[m - 1]`` is the number of piles holding exactly ``m`` cards, so
    ``freq`` always has length ``L``. Instances are hashable and compare
    structurally, which is what cycle detection relies on.
    """

    L: int
    bank: int
    freq: tuple[int, ...]

    def __post_init__(self):
        if self.L < 1:
            raise CapacityViolation(f"capacity must be positive, got {self.L}")
        if len(self.freq) != self.L:
            raise ValueError(f"freq must have length {self.L}, got {len(self.freq)}")
        if not 0 <= self.bank < self.L:
            raise CapacityViolation(f"bank {self.bank} outside [0, {self.L})")
        if any(f < 0 for f in self.freq):
            raise ValueError(f"negative frequency in {self.freq}")

    @classmethod
    def _trusted(cls, L: int, bank: int, freq: tuple[int, ...]) -> AustrianPartition:
        # skips validation; callers guarantee the invariants
        obj = object.__new__(cls)
        object.__setattr__(obj, "L", L)
        object.__setattr__(obj, "bank", bank)
        object.__setattr__(obj, "freq", freq)
        return obj

    @property
    def total(self) -> int:
        return total(self)

    @property
    def num_parts(self) -> int:
        return sum(self.freq)

    def f(self, m: int) -> int:
        """Number of parts of size ``m`` (1-based, bank excluded)."""
        return self.freq[m - 1]

    @property
    def parts(self) -> list[int]:
        return to_parts(self)[1]

    def __str__(self):
        return format_state(self.bank, self.parts)

    def to_json(self) -> dict:
        return {"L": self.L, "bank": self.bank, "parts": self.parts}

    @classmethod
    def from_json(cls, obj: dict) -> AustrianPartition:
        return from_parts(obj["bank"], obj["parts"], obj["L"])


@dataclass(frozen=True)
class GeneralPartition:
    """An arbitrary starting configuration; bank and pile sizes are unrestricted."""

    L: int
    bank: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.L < 1:
            raise CapacityViolation(f"capacity must be positive, got {self.L}")
        if self.bank < 0:
            raise ValueError(f"negative bank {self.bank}")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive, got {self.parts}")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def total(self) -> int:
        return self.bank + sum(self.parts)

    def is_austrian(self) -> bool:
        return self.bank < self.L and all(p <= self.L for p in self.parts)

    def to_austrian(self) -> AustrianPartition:
        return from_parts(self.bank, self.parts, self.L)

    def __str__(self):
        return format_state(self.bank, self.parts)


def format_state(bank: int, parts: Sequence[int]) -> str:
    return f"({bank}; {','.join(map(str, parts))})"


def from_parts(bank: int, parts: Sequence[int], L: int) -> AustrianPartition:
    if bank < 0:
        raise ValueError(f"negative bank {bank}")
    if bank >= L:
        raise CapacityViolation(f"bank {bank} must be below capacity {L}")
    counts = Counter(parts)
    for p in counts:
        if p < 1:
            raise ValueError(f"parts must be positive, got {p}")
        if p > L:
            raise CapacityViolation(f"part {p} exceeds capacity {L}")
    return AustrianPartition(L, bank, tuple(counts.get(m, 0) for m in range(1, L + 1)))


def to_parts(state: AustrianPartition) -> tuple[int, list[int]]:
    """Return ``(bank, parts)`` with parts listed largest first."""
    parts = []
    for m in range(state.L, 0, -1):
        parts.extend([m] * state.freq[m - 1])
    return state.bank, parts


def total(state: AustrianPartition) -> int:
    return state.bank + sum(m * f for m, f in enumerate(state.freq, start=1))


def _bounded_frequencies(n: int, L: int) -> Iterator[list[int]]:
    # Lexicographic order of largest-first part lists equals lexicographic
    # order of (f_L, ..., f_1), so fill counts from the top size down.
    freq = [0] * L

    def fill(size, rest):
        if size == 1:
            freq[0] = rest
            yield freq
            return
        for count in range(rest // size + 1):
            freq[size - 1] = count
            yield from fill(size - 1, rest - count * size)
        freq[size - 1] = 0

    yield from fill(L, n)


def enumerate_all(n: int, L: int) -> Iterator[AustrianPartition]:
    """Yield every Austrian partition of ``n`` with capacity ``L`` exactly once.

    Order is bank ascending, then the part list (largest first) in
    ascending lexicographic order.
    """
    if L < 1:
        raise CapacityViolation(f"capacity must be positive, got {L}")
    if n < 0:
        raise ValueError(f"deck size must be non-negative, got {n}")
    for bank in range(min(L - 1, n) + 1):
        for freq in _bounded_frequencies(n - bank, L):
            yield AustrianPartition._trusted(L, bank, tuple(freq))


def count_states(n: int, L: int) -> int:
    """Size of the state space, by the usual bounded-part recurrence."""
    # table[k][m]: partitions of m into parts of size <= k
    table = [[1] + [0] * n]
    for k in range(1, L + 1):
        row = table[-1][:]
        for m in range(k, n + 1):
            row[m] += row[m - k]
        table.append(row)
    return sum(table[L][n - b] for b in range(min(L - 1, n) + 1))
