import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from nlie import so_basis as sb
from nlie.scalar import I, INV_SQRT2
from nlie.so_basis import LieElt

NS = [3, 4, 5, 6, 7, 8]


def E(n, p, q, c=1):
    return LieElt(n, "E", {(p, q): c})


def V(n, p, q, c=1):
    return LieElt(n, "V", {(p, q): c})


def test_label_counts():
    for n in NS:
        assert len(sb.e_labels(n)) == len(sb.v_labels(n)) == (n + 1) * n // 2


def test_rank_and_parity():
    assert [sb.rank_of(n) for n in NS] == [2, 2, 3, 3, 4, 4]
    assert [sb.is_odd(n) for n in NS] == [False, True, False, True, False, True]
    assert 0 in sb.v_indices(4) and 0 not in sb.v_indices(3)


def test_lieelt_rejects_mixed_and_bad_labels():
    with pytest.raises(ValueError):
        E(3, 1, 2) + V(3, 1, 2)
    with pytest.raises(ValueError):
        E(3, 1, 5)
    with pytest.raises(ValueError):
        V(3, 0, 1)
    assert E(3, 2, 1) == -E(3, 1, 2)
    assert not E(3, 1, 1)


def test_commutator_examples():
    n = 3
    assert not sb.commutator(E(n, 1, 2), E(n, 3, 4))
    assert sb.commutator(E(n, 1, 2), E(n, 2, 3)) == E(n, 1, 3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_e_bracket_against_matrices(n):
    m = n + 1
    for x, y in itertools.product(sb.e_labels(n), repeat=2):
        want = oracles.bracket(oracles.unit(m, *x), oracles.unit(m, *y))
        got = sb.matrix_of(sb.commutator(E(n, *x), E(n, *y)))
        assert got == want


@pytest.mark.parametrize("n", NS)
def test_v_bracket_against_bilinear_form(n):
    for x, y in itertools.product(sb.v_labels(n), repeat=2):
        assert sb.label_bracket(n, "V", x, y) == sb.v_bracket_direct(x, y)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_round_trip(n):
    for lab in sb.e_labels(n):
        x = E(n, *lab)
        assert sb.from_v_basis(sb.to_v_basis(x)) == x
    for lab in sb.v_labels(n):
        x = V(n, *lab)
        assert sb.to_v_basis(sb.from_v_basis(x)) == x


@pytest.mark.parametrize("n", [3, 4, 5])
def test_basis_change_is_a_homomorphism(n):
    for x, y in itertools.product(sb.e_labels(n), repeat=2):
        lhs = sb.to_v_basis(sb.commutator(E(n, *x), E(n, *y)))
        rhs = sb.commutator(sb.to_v_basis(E(n, *x)), sb.to_v_basis(E(n, *y)))
        assert lhs == rhs


def test_cartan():
    n = 5
    for j in (1, 2, 3):
        eps = LieElt.cartan(n, j)
        assert eps == V(n, j, -j)
        assert sb.from_v_basis(eps) == E(n, 2 * j - 1, 2 * j, I)


@pytest.mark.parametrize("n", NS)
def test_cartan_acts_by_weight(n):
    # [ε_j, v_p∧v_q] = (ε_j | weight) v_p∧v_q
    for j in range(1, sb.rank_of(n) + 1):
        h = LieElt.cartan(n, j)
        for lab in sb.v_labels(n):
            w = sb.weight_of(n, lab)
            assert sb.commutator(h, V(n, *lab)) == V(n, *lab) * w[j - 1]


@pytest.mark.parametrize("n", [4, 6, 8])
def test_odd_case_last_column(n):
    N = sb.rank_of(n)
    for a in range(1, N + 1):
        for alpha in (0, 1):
            want = LieElt(n, "V", {})
            for nu in (1, -1):
                want = want + V(n, nu * a, 0, INV_SQRT2 * (I * nu) ** alpha)
            assert sb.to_v_basis(E(n, 2 * a - 1 + alpha, 2 * N + 1)) == want


def test_root_system_examples():
    # D2: ±ε1±ε2 as a set has four elements
    rs = sb.root_system(3)
    assert len(rs.roots) == 4
    assert set(rs.simple_roots) == {(1, -1), (1, 1)}
    rs = sb.root_system(4)
    assert len(rs.roots) == 8
    assert set(rs.simple_roots) == {(1, -1), (0, 1)}
    assert {(1, 0), (-1, 0), (0, 1), (0, -1)} <= set(rs.roots)


@pytest.mark.parametrize("n", NS)
def test_root_counts(n):
    N = sb.rank_of(n)
    rs = sb.root_system(n)
    want = 2 * N * (N - 1) + (2 * N if sb.is_odd(n) else 0)
    assert len(rs.roots) == want
    assert len(rs.positive_labels) == len(rs.negative_labels) == want // 2
    assert len(rs.cartan_labels) == N
    assert rs.rho == oracles.rho(n + 1)
    assert sorted(rs.positive_roots) == sorted(tuple(Fraction(x) for x in r)
                                               for r in oracles.positive_roots(n + 1))


def test_weights():
    assert sb.weight_of(3, (1, 2)) == (1, 1)
    assert not any(sb.weight_of(3, (-1, 1)))
    assert sb.weight_of(4, (-2, 0)) == (0, -1)


@pytest.mark.parametrize("n", NS)
def test_weyl_dimension(n):
    rs = sb.root_system(n)
    N = rs.N
    adj = (1, 1) + (0,) * (N - 2)
    if n > 3:
        assert rs.weyl_dimension(adj) == (n + 1) * n // 2
    else:
        assert rs.weyl_dimension(adj) + rs.weyl_dimension((1, -1)) == 6
    assert rs.weyl_dimension((1,) + (0,) * (N - 1)) == n + 1
    assert rs.weyl_dimension((0,) * N) == 1
    assert rs.weyl_dimension((2, 2) + (0,) * (N - 2)) == oracles.weyl_dim(n + 1, (2, 2) + (0,) * (N - 2))


def test_label_class_partition():
    n = 6
    rs = sb.root_system(n)
    for lab in sb.v_labels(n):
        cls = sb.label_class(n, lab)
        assert (cls == 2) == (lab in rs.positive_labels)
        assert (cls == 1) == (lab in rs.cartan_labels)


coeffs = st.integers(-2, 2)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 4, 5]), st.data())
def test_jacobi_identity(n, data):
    labs = sb.e_labels(n)
    x, y, z = (LieElt(n, "E", {lab: data.draw(coeffs) for lab in labs}) for _ in range(3))
    c = sb.commutator
    assert not (c(x, c(y, z)) + c(y, c(z, x)) + c(z, c(x, y)))
    assert c(x, y) == -c(y, x)
