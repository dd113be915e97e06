"""The full Farey sequence: every fraction with denominator <= L, repeats included."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .balance import ceil_div
from .errors import DenominatorTooLarge


@dataclass(frozen=True)
class FareyEntry:
    index: int
    raw_num: int
    raw_den: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.raw_num, self.raw_den)

    def __str__(self):
        v = self.value
        return f"{self.index} {self.raw_num}/{self.raw_den} {v.numerator}/{v.denominator}"

    def to_json(self) -> dict:
        v = self.value
        return {
            "index": self.index,
            "raw": f"{self.raw_num}/{self.raw_den}",
            "value": f"{v.numerator}/{v.denominator}",
        }


def full_farey(L: int, count: int) -> list[FareyEntry]:
    """First ``count`` entries; equal values are ordered by ascending denominator."""
    if L < 1:
        raise ValueError(f"L must be positive, got {L}")
    if count <= 0:
        return []
    # one unit interval holds L(L+1)/2 entries
    num_bound = ceil_div(2 * count, L * (L + 1)) * L + 2 * L
    while True:
        bound = Fraction(num_bound, L)
        pairs = [
            (num, den)
            for den in range(1, L + 1)
            for num in range(num_bound * den // L + 1)
            if Fraction(num, den) < bound
        ]
        if len(pairs) >= count:
            break
        num_bound *= 2
    pairs.sort(key=lambda nd: (Fraction(*nd), nd[1]))
    return [FareyEntry(i, num, den) for i, (num, den) in enumerate(pairs[:count])]


def _check(f: Fraction, L: int):
    if f < 0:
        raise ValueError(f"fraction must be non-negative, got {f}")
    if f.denominator > L:
        raise DenominatorTooLarge(f"denominator {f.denominator} exceeds L={L}")


def first_index(f: Fraction, L: int) -> int:
    """Position where ``f`` first occurs: the sum of ceil(kq/p) over k = 1..L."""
    _check(f, L)
    q, p = f.numerator, f.denominator
    return sum(ceil_div(k * q, p) for k in range(1, L + 1))


def multiplicity(f: Fraction, L: int) -> int:
    _check(f, L)
    return L // f.denominator


def index_to_fraction(n: int, L: int) -> tuple[Fraction, int]:
    """Reduced value of entry ``n`` and how many earlier entries share it.

    Walks the Stern-Brocot tree between consecutive integers, keeping the
    bracket ``lo <= a_n < hi`` until no fraction with denominator <= L lies
    strictly between the two ends.
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    if L < 1:
        raise ValueError(f"L must be positive, got {L}")
    whole = n // (L * (L + 1) // 2)
    lo, hi = (whole, 1), (whole + 1, 1)
    while lo[1] + hi[1] <= L:
        mid = (lo[0] + hi[0], lo[1] + hi[1])
        if first_index(Fraction(*mid), L) <= n:
            lo = mid
        else:
            hi = mid
    f = Fraction(*lo)
    return f, n - first_index(f, L)
