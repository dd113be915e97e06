import io
import re

import pytest

from austrian_solitaire.errors import TooLarge
from austrian_solitaire.explorer import (
    SWEEP_FIELDS,
    export_state_graph,
    sweep,
    verify_connectivity,
    write_sweep_csv,
)
from austrian_solitaire.partition import from_parts
from austrian_solitaire.predictor import predict_cycle
from oracles import austrian_state_count


def test_verify_example1(example1):
    r = verify_connectivity(22, 5)
    assert r.connected and r.matches_prediction
    assert r.period == 3
    assert r.canonical_cycle[0] == example1
    assert r.state_count == 973
    assert sum(r.transient_histogram.values()) == 973


def test_verify_trivial():
    r = verify_connectivity(0, 5)
    assert (r.state_count, r.max_transient, r.connected) == (1, 0, True)


def test_verify_hand_enumerated():
    # (1;2)->(0;2,1), (1;1,1)->(1;2), (0;1,1,1)->(1;2), (0;2,1) fixed
    r = verify_connectivity(3, 2)
    assert r.state_count == 4 and r.connected
    assert r.canonical_cycle == (from_parts(0, [2, 1], 2),)
    assert r.transient_histogram == {0: 1, 1: 1, 2: 2}
    assert r.max_transient == 2


@pytest.mark.parametrize("n, L", [(0, 1), (9, 2), (17, 4), (22, 5), (25, 6), (13, 7)])
def test_memoized_equals_plain(n, L):
    assert verify_connectivity(n, L, memoize=True) == verify_connectivity(n, L, memoize=False)


def test_sweep_order_and_rows():
    rows = list(sweep(range(0, 5), range(1, 4)))
    assert [(r.n, r.L) for r in rows] == [(n, L) for L in range(1, 4) for n in range(5)]
    assert all(r.ok for r in rows)
    for r in rows:
        assert r.report.state_count == austrian_state_count(r.n, r.L)


def test_sweep_empty():
    assert list(sweep(range(0), range(1, 4))) == []
    assert list(sweep(range(3), [])) == []


def test_sweep_singleton():
    (row,) = sweep([22], [5])
    assert row.report == verify_connectivity(22, 5)


def test_sweep_parallel_is_deterministic():
    serial = io.StringIO()
    parallel = io.StringIO()
    write_sweep_csv(sweep(range(0, 20), range(1, 5)), serial)
    write_sweep_csv(sweep(range(0, 20), range(1, 5), workers=3), parallel)
    assert serial.getvalue() == parallel.getvalue()


def test_sweep_records_failures():
    (row,) = sweep([3], [0])
    assert row.report is None and row.error and not row.ok
    out = io.StringIO()
    write_sweep_csv([row], out)
    assert "CapacityViolation" in out.getvalue()


def test_sweep_csv_header():
    out = io.StringIO()
    write_sweep_csv(sweep([22], [5]), out)
    header, line = out.getvalue().splitlines()
    assert header.split(",") == SWEEP_FIELDS
    assert header.startswith("n,L,state_count,period,fraction,max_transient,connected")
    assert line == "22,5,973,3,4/3,9,true,true,"


def _graph_parts(dot):
    nodes = re.findall(r'^\t"([^"]+)" \[(.*)\];$', dot, re.M)
    edges = re.findall(r'^\t"([^"]+)" -> "([^"]+)";$', dot, re.M)
    return nodes, edges


def test_graph_small():
    nodes, edges = _graph_parts(export_state_graph(3, 2))
    assert len(nodes) == 4 and len(edges) == 4
    marked = [name for name, attrs in nodes if "peripheries=2" in attrs]
    assert marked == ["(0; 2,1)"]


def test_graph_single_node():
    dot = export_state_graph(0, 1)
    nodes, edges = _graph_parts(dot)
    assert nodes == [("(0; )", 'label="(0; )", peripheries=2, color=red')]
    assert edges == [("(0; )", "(0; )")]
    assert dot.startswith("digraph ")


def test_graph_example1_structure():
    nodes, edges = _graph_parts(export_state_graph(22, 5))
    assert len(nodes) == verify_connectivity(22, 5).state_count
    sources = [a for a, _ in edges]
    assert sorted(sources) == sorted(name for name, _ in nodes)  # out-degree 1
    assert sum("peripheries=2" in attrs for _, attrs in nodes) == predict_cycle(22, 5).period


def test_graph_cap():
    with pytest.raises(TooLarge):
        export_state_graph(22, 5, cap=100)
