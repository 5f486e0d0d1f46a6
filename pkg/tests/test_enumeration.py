from __future__ import annotations

import pytest

from ascap.canon import canonical_form
from ascap.enumeration import GenSpec, SpecError, count_classes, enumerate_graphs, generate_graph6, scan
from ascap.graph import from_graph6
from ascap.metrics import girth, is_connected
from oracles import connected_counts, graph_code, labeled_connected_classes, min_code, unlabeled_graph_count

import numpy as np

CONNECTED = connected_counts(8)


@pytest.mark.parametrize("n", range(1, 9))
def test_connected_counts_match_cycle_index(n):
    assert count_classes(GenSpec(order=n)) == CONNECTED[n - 1]


@pytest.mark.parametrize("n", range(1, 8))
def test_all_graph_counts_match_cycle_index(n):
    assert count_classes(GenSpec(order=n, connected=False)) == unlabeled_graph_count(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sets_match_labeled_brute_force(n):
    ours = [from_graph6(s) for s in generate_graph6(GenSpec(order=n))]
    codes = min_code(np.array([graph_code(g) for g in ours], dtype=np.int64), n)
    assert len(set(codes.tolist())) == len(ours)
    assert set(codes.tolist()) == labeled_connected_classes(n)


def test_output_is_canonical_and_sorted():
    lines = generate_graph6(GenSpec(order=6))
    assert lines == sorted(lines)
    assert all(canonical_form(from_graph6(s)) == s for s in lines)


@pytest.mark.parametrize("n,count", [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)])
def test_cubic_counts(n, count):
    assert count_classes(GenSpec(order=n, regular=3)) == count


def test_four_regular_counts():
    assert count_classes(GenSpec(order=8, regular=4)) == 6
    assert count_classes(GenSpec(order=9, regular=4)) == 16


def test_constraints_are_respected():
    spec = GenSpec(order=8, min_size=9, max_size=10, max_degree=3, min_degree=2)
    gs = list(enumerate_graphs(spec))
    assert gs
    for g in gs:
        assert spec.admits(g)
    # the same classes come out of the unconstrained run after filtering
    full = {s for s in generate_graph6(GenSpec(order=8))
            if spec.admits(from_graph6(s))}
    assert full == {s for s in generate_graph6(spec)}


def test_girth_floor_is_a_filter():
    spec = GenSpec(order=8, min_girth=5)
    want = {s for s in generate_graph6(GenSpec(order=8))
            if (girth(from_graph6(s)) or 99) >= 5}
    assert set(generate_graph6(spec)) == want


def test_parallel_output_identical():
    spec = GenSpec(order=7)
    assert generate_graph6(spec, jobs=1) == generate_graph6(spec, jobs=2)


def test_invalid_specs():
    for bad in (GenSpec(order=0), GenSpec(order=17), GenSpec(order=5, regular=3),
                GenSpec(order=5, min_size=6, max_size=5), GenSpec(order=5, regular=5)):
        with pytest.raises(SpecError):
            bad.validate()


def test_stream_is_restartable():
    s = enumerate_graphs(GenSpec(order=5))
    assert list(s.graph6_lines()) == list(s.graph6_lines())
    assert len(s) == 21


def test_scan_basics():
    res = scan(GenSpec(order=6), None, lambda g: g.m, "max", name="size")
    assert res.value == 15 and res.count == 1 and not res.truncated
    res = scan(GenSpec(order=6), lambda g: g.m == 6, lambda g: g.m, "min", name="size", cert_cap=3)
    assert res.value == 6 and res.count == 13 and len(res.certificates) == 3 and res.truncated
    res = scan(GenSpec(order=5), lambda g: False, lambda g: 1)
    assert res.value is None and not res.has_witness


def test_scan_parallel_identical():
    a = scan(GenSpec(order=8, max_degree=3), is_connected, girth, "max", jobs=1)
    b = scan(GenSpec(order=8, max_degree=3), is_connected, girth, "max", jobs=2)
    assert a.to_dict() == b.to_dict()
