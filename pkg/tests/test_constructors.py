from __future__ import annotations

import pytest

from ascap import constructors as C
from ascap.canon import canonical_form, is_isomorphic
from ascap.classify import is_ap, is_asc, is_self_centered, is_unicyclic, recognize_theta, top_vertex_count
from ascap.graph import GraphError, cycle, from_graph6, to_graph6
from ascap.metrics import ecc_profile, girth, independence_number


def test_theta_examples():
    g = C.theta(1, 2, 4)
    prof = ecc_profile(g)
    assert g.n == 6 and (prof.radius, prof.diameter) == (2, 3)
    assert is_asc(C.theta(1, 2, 8))
    k23 = C.theta(2, 2, 2)
    assert is_self_centered(k23) and sorted(k23.degrees()) == [2, 2, 2, 3, 3]
    assert C.theta(4, 1, 2) == C.theta(1, 2, 4)
    with pytest.raises(GraphError):
        C.theta(1, 1, 2)


@pytest.mark.parametrize("n", [7, 9, 11, 13])
def test_cycle_pendant(n):
    g = C.cycle_pendant(n)
    assert is_asc(g) and is_unicyclic(g) and girth(g) == n - 1


@pytest.mark.parametrize("n", [5, 6, 8])
def test_cycle_pendant_rejects(n):
    with pytest.raises(GraphError):
        C.cycle_pendant(n)


def test_girth_extremal_examples():
    g = C.girth_extremal_asc(12)
    assert recognize_theta(g.delete_vertex(11)).as_tuple() == (4, 4, 4)
    assert g.neighbors(11) == [0] and g.degree(0) == 4
    assert girth(g) == 8
    assert girth(C.girth_extremal_asc(18)) == 12
    assert girth(C.girth_extremal_asc(14)) == 8
    with pytest.raises(GraphError):
        C.girth_extremal_asc(13)
    with pytest.raises(GraphError):
        C.girth_extremal_asc(10)


@pytest.mark.parametrize("n", range(12, 61, 2))
def test_girth_extremal_postconditions(n):
    g = C.girth_extremal_asc(n)
    assert g.n == n and is_asc(g) and girth(g) == 4 * (n // 6)


def test_girth_extremal_variants_at_14():
    asc = [h for h in C.girth_extremal_variants(14) if is_asc(h)]
    classes = {canonical_form(h) for h in asc}
    assert len(classes) >= 3


def test_z_examples():
    g = C.Z(12, 4)
    assert g.m == 8 + 1 + 6 and independence_number(g) == 8
    assert C.Z(5, 2).n == 5 and C.Z(5, 2).m == 5
    assert independence_number(C.Z(10, 3)) == 7
    with pytest.raises(GraphError):
        C.Z(6, 3)


@pytest.mark.parametrize("r", range(2, 9))
def test_z_postconditions(r):
    for n in range(2 * r + 1, 2 * r + 10):
        g = C.Z(n, r)
        assert is_asc(g) and ecc_profile(g).radius == r and independence_number(g) == n - r


def test_cor7_pair():
    a, b = C.cor7_extremals(7)
    assert is_asc(a) and is_asc(b) and not is_isomorphic(a, b)
    assert independence_number(a) == independence_number(b) == 5


@pytest.mark.parametrize("k", range(4, 13))
def test_regular_asc(k):
    g = C.regular_asc(k)
    prof = ecc_profile(g)
    assert g.n == 2 * k + 2 and set(g.degrees()) == {k} and is_asc(g)
    assert list(prof.periphery) == [0, k + 1]
    assert list(prof.center) == [v for v in range(g.n) if v not in (0, k + 1)]


def test_regular_asc_rejects_small_degree():
    with pytest.raises(GraphError):
        C.regular_asc(3)


def test_cubic_witness():
    g = C.cubic_asc_witness()
    assert g.n == 12 and set(g.degrees()) == {3} and is_asc(g)


@pytest.mark.parametrize("n", range(3, 31))
def test_ap_max_size(n):
    g = C.ap_max_size(n)
    assert is_ap(g) and g.m == (n - 1) ** 2 // 2


def test_ap_max_size_small_values():
    assert C.ap_max_size(7).m == 18 and C.ap_max_size(8).m == 24 and C.ap_max_size(5).m == 8
    with pytest.raises(GraphError):
        C.ap_max_size(2)


def test_ap_degree_rejections():
    for delta in (2, 9, 10, 8 + 4):
        with pytest.raises(GraphError):
            C.ap_with_max_degree(12, delta)
    with pytest.raises(GraphError):
        C.ap_with_max_degree(6, 3)


def test_ap_degree_star():
    g = C.ap_with_max_degree(9, 8)
    assert g.degrees().count(8) == 1 and g.m == 8


@pytest.mark.parametrize("n", range(7, 21))
def test_duplication_chain(n):
    for delta in range(3, n - 3):
        chain = C.ap_degree_chain(n, delta)
        for step, g in enumerate(chain):
            assert is_ap(g) and max(g.degrees()) == 3 + step
            assert g.n == n - delta + 3 + step
            if step < len(chain) - 1:
                assert C.duplication_vertex(g) is not None
        assert chain[-1] == C.ap_with_max_degree(n, delta)


def test_duplication_invariant_holds_on_chain_ends():
    for n in range(7, 21):
        for delta in range(3, n - 3):
            assert C.duplication_vertex(C.ap_with_max_degree(n, delta)) is not None


@pytest.mark.parametrize("n", range(7, 63))
def test_cubic_bases(n):
    g = C.ap_cubic_base(n)
    assert g.n == n and max(g.degrees()) == 3 and is_ap(g)


def test_ap_degree_twelve_five():
    g = C.ap_with_max_degree(12, 5)
    assert g.n == 12 and is_ap(g) and max(g.degrees()) == 5


@pytest.mark.parametrize("n", range(8, 31))
def test_ap_top_extremal(n):
    g = C.ap_top_extremal(n)
    assert g.n == n and is_ap(g) and max(g.degrees()) == n - 4 and top_vertex_count(g) == n - 5


def test_top_extremal_independent_of_vertex_choice():
    base = C.load_fixture("ap_deg3_7")
    center = list(ecc_profile(base).center)
    choices = [v for v in range(7) if base.degree(v) == 3 and v not in center]
    from ascap.graph import blow_up

    forms = {canonical_form(blow_up(base, v, 3)) for v in choices}
    assert len(forms) == 1


def test_build_catalogue():
    assert C.build("cycle", 3) == C.basic("complete", 3)
    assert is_asc(C.build(C.FamilyId.kn_minus_edge, 5))
    assert C.build("path", 1).n == 1
    assert ecc_profile(C.basic("kn_minus_edge", 5)).radius == 1
    for fam in C.FamilyId:
        assert fam in C.BUILDERS and fam in C.SIGNATURES
    with pytest.raises(GraphError):
        C.build("theta", 1, 2)
    with pytest.raises(GraphError):
        C.build("nonsense", 1)
    with pytest.raises(GraphError):
        C.basic("theta", 3)


def test_every_constructed_graph_round_trips():
    made = [C.theta(2, 3, 5), C.cycle_pendant(9), C.girth_extremal_asc(16), C.Z(11, 3), C.regular_asc(7),
            C.ap_max_size(10), C.ap_with_max_degree(15, 7), C.ap_top_extremal(12), cycle(5)]
    for g in made:
        assert from_graph6(to_graph6(g)) == g
