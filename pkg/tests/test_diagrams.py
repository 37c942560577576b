import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from nlie import diagrams as dg
from nlie import highest_weight as hw
from nlie import so_basis as sb
from nlie import uea
from nlie.diagrams import CrossingClass, DiagramSum, arc
from nlie.scalar import I, poly_vars


def test_crossing_classes():
    assert dg.crossing_class((1, 2), (3, 4)) is CrossingClass.DISJOINT
    assert dg.crossing_class((1, 4), (2, 3)) is CrossingClass.NESTED
    assert dg.crossing_class((1, 3), (2, 4)) is CrossingClass.CROSSING
    assert dg.crossing_class((1, 2), (2, 3)) is CrossingClass.SHARED
    assert dg.is_crossing((2, 4), (1, 3))


def test_brute_force_crossing_count():
    # among chords on m points, crossing pairs ↔ 4-subsets
    for m in range(4, 9):
        chords = list(itertools.combinations(range(1, m + 1), 2))
        crossing = sum(dg.is_crossing(x, y) for x, y in itertools.combinations(chords, 2))
        assert crossing == comb(m, 4)


def test_reversed_arc_is_negated():
    assert arc(4, 3, 1) == arc(4, 1, 3, -1)
    with pytest.raises(ValueError):
        arc(4, 1, 5)


def test_resolve_crossing():
    d = arc(4, 1, 3) * arc(4, 2, 4)
    nf = dg.normalize_diagram(d)
    assert all(dg.is_normal(w) for w in nf.terms)
    assert nf == arc(4, 1, 2) * arc(4, 3, 4) + arc(4, 1, 4) * arc(4, 2, 3)


def test_sorting_uses_the_bracket():
    d = arc(4, 2, 3) * arc(4, 1, 2)
    assert dg.normalize_diagram(d) == arc(4, 1, 2) * arc(4, 2, 3) - arc(4, 1, 3)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_generators_normalize_to_zero(n):
    for r in uea.qa_generators(n):
        assert not dg.normalize_diagram(dg.diagram_of(r))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 4, 5]), st.data())
def test_confluence(n, data):
    labs = sb.e_labels(n)
    word = tuple(data.draw(st.lists(st.sampled_from(labs), min_size=2, max_size=3)))
    seed = data.draw(st.integers(0, 10_000))
    assert dg.confluence_check(DiagramSum(n + 1, {word: 1}), strategies=20, seed=seed)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([3, 4]), st.data())
def test_route_equivalence(n, data):
    labs = sb.e_labels(n)
    word = tuple(data.draw(st.lists(st.sampled_from(labs), min_size=1, max_size=3)))
    u = uea.pbw_normalize(n, {word: 1})
    assert dg.route_difference_in_ideal(u)


def test_normal_forms_are_normal():
    rng = random.Random(5)
    n = 5
    labs = sb.e_labels(n)
    for _ in range(20):
        w = tuple(rng.choice(labs) for _ in range(3))
        nf = dg.normalize_diagram(DiagramSum(n + 1, {w: 1}))
        assert all(dg.is_normal(k) for k in nf.terms)


@pytest.mark.parametrize("n", range(3, 11))
def test_count_noncrossing(n):
    M = comb(n + 1, 2)
    assert dg.count_noncrossing(n, 2) == M * (M + 1) // 2 - comb(n + 1, 4)


def test_count_small():
    assert dg.count_noncrossing(3) == 20
    assert dg.count_noncrossing(4) == 50


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_count_equals_ker_phi(n):
    assert dg.count_noncrossing(n) == len(uea.ker_phi(n))


def test_degree_three_regression():
    # recorded, not compared with a formula
    assert [len(dg.noncrossing_monomials(n, 3)) for n in (3, 4, 5)] == [50, 175, 490]
    with pytest.raises(ValueError):
        dg.count_noncrossing(4, 3)


# -- the classification polynomial on diagrams -------------------------------------

def test_graphical_normal_form_n3():
    nf = dg.graphical_normal_form(1, 2, 3)
    assert nf == arc(4, 1, 2) * arc(4, 3, 4) * 2 + arc(4, 3, 4, -2 * I)


def test_graphical_polynomial_n3():
    l1, l2 = poly_vars(2)
    assert dg.graphical_classification_polynomial(1, 2, 3) == l2 * (l1 + 1) * -2


def test_cartan_arc_value():
    l1, l2, l3 = poly_vars(3)
    assert dg.cartan_arc_value(5, 3, 4) == l2 * -I
    # ε_j = i·(arc 2j−1 → 2j) evaluates to λ_j
    assert dg.evaluate_cartan_diagram(arc(6, 5, 6, I)) == l3
    with pytest.raises(ValueError):
        dg.cartan_arc_value(5, 2, 3)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_graphical_matches_algebraic(n):
    N = sb.rank_of(n)
    lam = poly_vars(N)
    alg = hw.classification_polynomials(n)
    for j, k in itertools.combinations(range(1, N + 1), 2):
        g = dg.graphical_classification_polynomial(j, k, n)
        assert g == lam[k - 1] * (lam[j - 1] + 1) * -2
        assert g.monic() == alg[(j, k)]


def test_leg_shifts_and_root_vectors():
    for n in (3, 5, 8):
        for j, k in itertools.combinations(range(1, sb.rank_of(n) + 1), 2):
            assert all(dg.leg_shift_relations(n, j, k).values())
            assert all(dg.vanishing_root_vectors(n, j, k).values())


def test_bad_pair():
    with pytest.raises(ValueError):
        dg.graphical_classification_polynomial(2, 1, 5)


def test_render_text():
    txt = dg.render_text(arc(4, 1, 3) * arc(4, 2, 4))
    assert txt.splitlines() == ["coeff 1", "1 2 3 4", "[---]", "  [---]"]
    assert dg.render_text(DiagramSum(4, {})).endswith("(empty)")
