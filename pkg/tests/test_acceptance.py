"""Exit criteria for the package; each test is one criterion.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import json
import random
import time
from fractions import Fraction
from math import gcd

from austrian_solitaire.balance import (
    PeriodicSequence,
    gamma_at,
    is_balanced,
    partial_sums,
    phi,
    phi_inverse,
)
from austrian_solitaire.cli import run
from austrian_solitaire.dynamics import find_cycle, normalize, step
from austrian_solitaire.explorer import sweep
from austrian_solitaire.farey import first_index, full_farey, multiplicity
from austrian_solitaire.partition import AustrianPartition, GeneralPartition, enumerate_all


def _ceil(a, b):
    return -(-a // b)


def _predict_cli(n, L):
    import io
    out = io.StringIO()
    start = time.perf_counter()
    code = run(["predict", str(n), str(L), "--format", "json"], stdout=out)
    return code, json.loads(out.getvalue()), time.perf_counter() - start


def test_ac01_example1_reproduction():
    code, doc, elapsed = _predict_cli(22, 5)
    assert code == 0
    assert doc["fraction"] == "4/3"
    assert doc["period"] == 3
    assert doc["min_bank_state"] == {"L": 5, "bank": 0, "parts": [5, 5, 4, 3, 2, 2, 1]}
    assert elapsed < 1.0


def test_ac02_example2_reproduction():
    code, doc, elapsed = _predict_cli(139, 14)
    assert code == 0
    assert doc["fraction"] == "5/4"
    assert doc["period"] == 4
    assert doc["min_bank_state"] == {
        "L": 14,
        "bank": 2,
        "parts": [14, 14, 13, 12, 11, 10, 10, 9, 8, 7, 6, 6, 5, 4, 3, 2, 2, 1],
    }
    assert elapsed < 1.0


def test_ac03_farey_listing():
    listing = [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 5), (1, 4), (1, 3), (2, 5), (1, 2),
        (2, 4), (3, 5), (2, 3), (3, 4), (4, 5), (1, 1), (2, 2), (3, 3), (4, 4), (5, 5),
        (6, 5), (5, 4), (4, 3), (7, 5),
    ]
    assert [(e.raw_num, e.raw_den) for e in full_farey(5, 24)] == listing


def test_ac04_first_index_closed_form():
    start = time.perf_counter()
    checked = 0
    for L in range(1, 9):
        values = [e.value for e in full_farey(L, 520)]
        for p in range(1, L + 1):
            for q in range(0, 500):
                if gcd(q, p) != 1:
                    continue
                f = Fraction(q, p)
                N = first_index(f, L)
                if N > 500:
                    break
                assert N == sum(_ceil(k * q, p) for k in range(1, L + 1))
                assert values.index(f) == N
                assert values.count(f) == multiplicity(f, L) == L // p
                checked += 1
    assert checked > 0
    assert time.perf_counter() - start < 10.0


def test_ac05_theorem_desk_scale():
    start = time.perf_counter()
    rows = list(sweep(range(0, 61), range(1, 7)))
    elapsed = time.perf_counter() - start
    assert len(rows) == 61 * 6
    bad = [(r.n, r.L, r.error) for r in rows if not r.ok or not r.report.matches_prediction]
    assert bad == []
    assert elapsed < 120.0


def _random_runs(count=1000, seed=20261018):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, 200)
        L = rng.randint(1, 20)
        bank = rng.randint(0, n)
        rest, parts = n - bank, []
        while rest:
            part = rng.randint(1, rest)
            parts.append(part)
            rest -= part
        state, _ = normalize(GeneralPartition(L, bank, tuple(parts)))
        yield n, L, find_cycle(state)


def test_ac06_cycles_are_balanced():
    failures = [(n, L) for n, L, r in _random_runs() if not is_balanced(phi(r))]
    assert failures == []


def test_ac07_bank_window():
    failures = []
    for n, L, r in _random_runs():
        p = phi(r).density.denominator
        banks = [s.bank for s in r.cycle_states]
        if not (min(banks) < L // p and max(banks) - min(banks) == L - L // p):
            failures.append((n, L))
    assert failures == []


def test_ac08_gamma_identities():
    for p in range(1, 13):
        for q in range(0, 25):
            if gcd(q, p) != 1:
                continue
            f = Fraction(q, p)
            for m in range(-p, 2 * p):
                for k in range(1, 3 * p + 1):
                    window = sum(gamma_at(f, m + i) for i in range(k))
                    assert window == _ceil(q * (m + k), p) - _ceil(q * m, p)
                    assert q * k // p <= window <= _ceil(q * k, p)
            prefix = partial_sums([gamma_at(f, i) for i in range(p)], 3 * p)
            assert prefix == [_ceil(q * k, p) for k in range(1, 3 * p + 1)]


def test_ac09_infeasible_example():
    word = PeriodicSequence((1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 2, 0, 0, 0))
    assert is_balanced(word) is False
    state = phi_inverse(word, 20, 107)
    assert state.bank == 0
    assert state.parts == [20, 17, 15, 13, 12, 10, 10, 6, 3, 1]


def test_ac10_conservation_and_closure():
    violations = 0
    for L in range(1, 7):
        for n in range(0, 61):
            for s in enumerate_all(n, L):
                t = step(s)
                try:
                    AustrianPartition(t.L, t.bank, t.freq)
                except ValueError:
                    violations += 1
                    continue
                if t.total != n:
                    violations += 1
    assert violations == 0
