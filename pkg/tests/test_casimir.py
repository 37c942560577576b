from collections import Counter
from fractions import Fraction
from math import comb

import pytest

import oracles
from nlie import casimir, uea
from nlie.linalg import Echelon
from nlie.uea import SymElt

# frozen spectra of the table operator; the oracle below re-derives them
# from highest weights, so they are not just regression numbers
SPECTRA = {
    3: {-2: 2, 0: 9, 1: 10},
    4: {-3: 1, -2: 5, Fraction(-1, 2): 14, 1: 35},
    5: {-4: 1, -2: 15, -1: 20, 1: 84},
    6: {-5: 1, -2: 35, Fraction(-3, 2): 27, 1: 168},
    7: {-6: 1, -2: 105, 1: 300},
}


def test_all_distinct_row():
    s = SymElt.basis(3, (1, 2), (3, 4))
    want = SymElt.basis(3, (2, 4), (1, 3)) - SymElt.basis(3, (1, 4), (2, 3))
    assert casimir.cbar_apply(s) == want


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_table_is_definition_plus_identity(n):
    for key in uea.s2_basis(n):
        s = SymElt(n, "E", {key: 1})
        assert casimir.cbar_apply(s) == casimir.cbar_definition(s) + s


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_r_has_eigenvalue_minus_two(n):
    for r in uea.r_span_sym(n):
        assert casimir.cbar_apply(r) == r * -2


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_eigenbasis_spans(n):
    eb = casimir.eigenbasis(n)
    assert len(eb) == uea.dim_s2(n)
    assert Echelon(e.vector.terms for e in eb).rank == uea.dim_s2(n)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_family_eigenvalues(n):
    got = {}
    for e in casimir.eigenbasis(n):
        got.setdefault(e.family, set()).add(e.eigenvalue)
    assert got["B:x"] == {-2}
    assert got["B:1"] == got["C:diff"] == got["D:square"] == {1}
    # −(n−3)/2 and −(n−1): the table operator is the definition shifted by Id
    assert got["C:sum"] == got["D:Sdiff"] == {Fraction(-(n - 3), 2)}
    assert got["D:Ssum"] == {-(n - 1)}
    if n > 3:
        assert got["D:zigzag"] == {1}


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_family_sizes(n):
    sizes = Counter(e.family[0] for e in casimir.eigenbasis(n))
    assert sizes["B"] == 3 * comb(n + 1, 4)
    assert sizes["C"] == 3 * comb(n + 1, 3)
    assert sizes["D"] == comb(n + 1, 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_spectrum_frozen_and_predicted(n):
    spect = casimir.spectrum(n)
    assert spect == SPECTRA[n]
    assert spect == oracles.predicted_spectrum(n)
    assert sum(spect.values()) == uea.dim_s2(n)


@pytest.mark.slow
def test_spectrum_n8():
    assert casimir.spectrum(8) == oracles.predicted_spectrum(8)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_r_equals_eigenspace(n):
    rep = casimir.identify_R(n, decomposition=False)
    assert rep["R_equals_eig"]
    assert rep["dim_R"] == rep["dim_eig_minus2"] == comb(n + 1, 4)


def test_n3_eigenspace_has_extra_trivial():
    # R is the trivial module here and ΣS_a also sits at −2
    rep = casimir.identify_R(3, decomposition=False)
    assert rep["dim_R"] == 1 and rep["dim_eig_minus2"] == 2
    assert rep["R_subset_eig"] and not rep["R_equals_eig"]


def test_so6_decomposition():
    rep = casimir.identify_R(5)
    assert rep["dim_R"] == 15
    assert rep["dim_eig_minus2"] == 15
    assert rep["hw_eps12_dim"] == 1 and rep["hw_eps12_in_R"]
    dec = {tuple(d["weight"]): (d["multiplicity"], d["dimension"]) for d in rep["s2_decomposition"]}
    assert dec == {("0", "0", "0"): (1, 1), ("1", "1", "0"): (1, 15),
                   ("2", "2", "0"): (1, 84), ("2", "0", "0"): (1, 20)}
    assert rep["s2_dimension_sum"] == 1 + 15 + 84 + 20 == 120


def test_decomposition_eigenvalues_match_casimir_formula():
    n = 6
    for d in casimir.s2_decomposition(n):
        mu = d["weight"]
        assert d["dimension"] == oracles.weyl_dim(n + 1, mu)
        assert d["eigenvalues"] == [oracles.casimir_value(n + 1, mu)]


def test_eigen_value_of_rejects_non_eigenvectors():
    s = SymElt.basis(4, (1, 2), (3, 4))
    assert casimir.eigen_value_of(s) is None
