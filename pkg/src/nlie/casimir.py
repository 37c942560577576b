"""The shifted Casimir c̄ on S²(so(n+1)) and its eigenspaces.

``cbar_apply`` is the six-case table on e^{ab}⊙e^{cd}.  The definition
c̄ = (n/2)c − n·Id with c = −(1/2n)Σ_{i<j} ad(e^{ij})² is available as
``cbar_definition``; the table equals that operator plus the identity (see
the tests), so every eigenvalue read from the table is one more than the
corresponding eigenvalue of the literal definition.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import so_basis as sb
from .linalg import Echelon, _div, kernel_of_map, vec_iadd
from .scalar import simplify
from .so_basis import LieElt
from .uea import SymElt, adjoint_on_sym, dim_s2, r_span_sym, s2_basis, sym, sym_convert


def _e(n: int, a: int, b: int) -> LieElt:
    return LieElt(n, "E", {(a, b): 1}) if a != b else LieElt.zero(n, "E")


@lru_cache(maxsize=None)
def _table(n: int, x: tuple, y: tuple) -> dict:
    (a, b), (c, d) = x, y
    m = n + 1
    half = Fraction(-1, 2)
    out = SymElt(n, "E", {})
    pts = range(1, m + 1)
    if a == c and b == d:
        for i in pts:
            out = out + sym(_e(n, a, i), _e(n, a, i)) * half + sym(_e(n, b, i), _e(n, b, i)) * half
        out = out + sym(_e(n, a, b), _e(n, a, b))
    elif a == c:
        for i in pts:
            out = out + sym(_e(n, i, b), _e(n, i, d)) * half
        out = out + sym(_e(n, a, b), _e(n, a, d))
    elif b == d:
        for i in pts:
            out = out + sym(_e(n, a, i), _e(n, c, i)) * half
        out = out + sym(_e(n, a, b), _e(n, c, b))
    elif b == c:
        for i in pts:
            out = out + sym(_e(n, a, i), _e(n, i, d)) * half
        out = out + sym(_e(n, a, b), _e(n, b, d))
    elif a == d:
        for i in pts:
            out = out + sym(_e(n, i, b), _e(n, c, i)) * half
        out = out + sym(_e(n, a, b), _e(n, c, a))
    else:
        out = -sym(_e(n, a, d), _e(n, b, c)) + sym(_e(n, b, d), _e(n, a, c))
    return out.terms


def cbar_apply(s: SymElt) -> SymElt:
    """c̄ via the case table (linear extension over canonical pairs)."""
    if s.family != "E":
        return sym_convert(cbar_apply(sym_convert(s, "E")), s.family)
    out: dict = {}
    for (x, y), c in s.terms.items():
        vec_iadd(out, _table(s.n, x, y), c)
    return SymElt(s.n, "E", out)


def casimir_c(s: SymElt) -> SymElt:
    """c = −(1/2n) Σ_{i<j} ad(e^{ij})² acting on S²."""
    n = s.n
    out = SymElt(n, s.family, {})
    for lab in sb.e_labels(n):
        g = sb.convert(LieElt.basis(n, "E", *lab), s.family)
        out = out + adjoint_on_sym(g, adjoint_on_sym(g, s))
    return out * Fraction(-1, 2 * n)


def cbar_definition(s: SymElt) -> SymElt:
    """(n/2)c − n·Id, literally."""
    return casimir_c(s) * Fraction(s.n, 2) - s * s.n


# --------------------------------------------------------------------------
# eigenvectors
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Eigenvector:
    vector: SymElt
    eigenvalue: Fraction
    family: str  # B, C or D plus the sub-kind
    stated: Fraction  # nominal eigenvalue attached to the family


def eigen_value_of(v: SymElt) -> Fraction | None:
    """θ with c̄v = θv, or None if v is not an eigenvector."""
    img = cbar_apply(v)
    k = next(iter(v.terms))
    theta = simplify(_div(img.terms.get(k, 0), v.terms[k]))
    return theta if img == v * theta else None


def _x(n, a, b):
    return sym(_e(n, a, b), _e(n, a, b))


def _s(n, a):
    out = SymElt(n, "E", {})
    for i in range(1, n + 2):
        out = out + _x(n, a, i) if i != a else out
    return out


def eigen_families(n: int) -> list[tuple[SymElt, str, Fraction]]:
    """The B, C and D families with the eigenvalues stated for them."""
    m = n + 1
    one = Fraction(1)
    lo = Fraction(-(n - 1), 2)
    fams = []
    for a, b, c, d in itertools.combinations(range(1, m + 1), 4):
        ab, cd, ad, bc, ac, bd = (_e(n, *p) for p in ((a, b), (c, d), (a, d), (b, c), (a, c), (b, d)))
        fams.append((sym(ab, cd) + sym(ad, bc) - sym(ac, bd), "B:x", Fraction(-2)))
        fams.append((sym(ab, cd) + sym(ac, bd), "B:1", one))
        fams.append((sym(ad, bc) + sym(ac, bd), "B:1", one))
    for a, c in itertools.combinations(range(1, m + 1), 2):
        ks = [k for k in range(1, m + 1) if k not in (a, c)]
        vs = [sym(_e(n, a, k), _e(n, c, k)) for k in ks]
        for u, w in zip(vs, vs[1:]):
            fams.append((u - w, "C:diff", one))
        total = vs[0]
        for u in vs[1:]:
            total = total + u
        fams.append((total, "C:sum", lo))
    for a in range(1, m + 1):
        for b in range(a + 2, m):
            v = _x(n, a, b) - _x(n, a + 1, b) - _x(n, a, b + 1) + _x(n, a + 1, b + 1)
            fams.append((v, "D:square", one))
    for a in range(1, m):
        fams.append((_s(n, a) - _s(n, a + 1), "D:Sdiff", lo))
    total = _s(n, 1)
    for a in range(2, m + 1):
        total = total + _s(n, a)
    fams.append((total, "D:Ssum", Fraction(-n)))
    for p in range(2, n):
        v = _x(n, p - 1, p) - _x(n, p - 1, p + 1) - _x(n, p, p + 2) + _x(n, p + 1, p + 2)
        fams.append((v, "D:zigzag", one))
    return fams


def eigenbasis(n: int) -> list[Eigenvector]:
    """Eigenvectors from the B, C, D families, each with its verified eigenvalue.

    Raises if a family member is not an eigenvector."""
    out = []
    for v, fam, stated in eigen_families(n):
        theta = eigen_value_of(v)
        if theta is None:
            raise ArithmeticError(f"{fam} vector is not an eigenvector of c̄: {v}")
        out.append(Eigenvector(v, theta, fam, stated))
    return out


def eigenspace(n: int, theta) -> list[dict]:
    """Kernel of c̄ − θ·Id on S², as sparse vectors over the E-family pairs."""
    theta = Fraction(theta)

    def apply(key):
        t = dict(_table(n, *key))
        vec_iadd(t, {key: -theta})
        return t

    return kernel_of_map(s2_basis(n), apply)


def candidate_eigenvalues(n: int) -> list[Fraction]:
    vals = {Fraction(-2), Fraction(1), Fraction(-(n - 3), 2), Fraction(-(n - 1)),
            Fraction(-(n - 1), 2), Fraction(-n)}
    return sorted(vals)


def spectrum(n: int) -> dict[Fraction, int]:
    """Eigenvalue → multiplicity over the candidate list; the multiplicities
    summing to dim S² proves the list is the whole spectrum."""
    out = {}
    for th in candidate_eigenvalues(n):
        d = len(eigenspace(n, th))
        if d:
            out[th] = d
    return out


# --------------------------------------------------------------------------
# highest-weight vectors in S²
# --------------------------------------------------------------------------

def sym_weight(n: int, key) -> tuple:
    x, y = key
    return sb.add_weights(sb.weight_of(n, x), sb.weight_of(n, y))


def weight_space(n: int, mu) -> list:
    mu = tuple(Fraction(c) for c in mu)
    return [k for k in s2_basis(n, "V") if sym_weight(n, k) == mu]


def highest_weight_vectors(n: int, mu) -> list[dict]:
    """Vectors of weight μ in S² (V family) killed by every positive root vector."""
    rs = sb.root_system(n)
    raising = [LieElt.basis(n, "V", *lab) for lab in rs.positive_labels]

    def apply(key):
        s = SymElt(n, "V", {key: 1})
        out: dict = {}
        for i, g in enumerate(raising):
            for k, c in adjoint_on_sym(g, s).terms.items():
                out[(i, k)] = c
        return out

    return kernel_of_map(weight_space(n, mu), apply)


def dominant_weights_s2(n: int) -> list[tuple]:
    rs = sb.root_system(n)
    seen = set()
    for k in s2_basis(n, "V"):
        w = sym_weight(n, k)
        if w in seen:
            continue
        if all(rs.coroot_pairing(w, a) >= 0 for a in rs.simple_roots):
            seen.add(w)
    return sorted(seen, reverse=True)


def s2_decomposition(n: int) -> list[dict]:
    """Irreducible constituents of S²: highest weight, multiplicity, Weyl
    dimension and the c̄ eigenvalue on the highest-weight vectors."""
    rs = sb.root_system(n)
    out = []
    for mu in dominant_weights_s2(n):
        hws = highest_weight_vectors(n, mu)
        if not hws:
            continue
        thetas = {eigen_value_of(sym_convert(SymElt(n, "V", v), "E")) for v in hws}
        out.append({
            "weight": mu,
            "multiplicity": len(hws),
            "dimension": int(rs.weyl_dimension(mu)),
            "eigenvalues": sorted(t for t in thetas if t is not None),
        })
    return out


def r_space(n: int) -> Echelon:
    return Echelon(r.terms for r in r_span_sym(n))


def identify_R(n: int, decomposition: bool = True) -> dict:
    """Compare span R with Eigenspace(−2) and record the evidence."""
    R = r_space(n)
    eig = eigenspace(n, -2)
    joint = Echelon([*R.basis(), *eig])
    r_in_eig = all(eigen_value_of(SymElt(n, "E", v)) == -2 for v in R.basis())
    spect = spectrum(n)
    rep = {
        "n": n,
        "dim_R": R.rank,
        "expected_dim_R": comb(n + 1, 4),
        "dim_eig_minus2": len(eig),
        "R_subset_eig": r_in_eig and joint.rank == len(eig),
        "R_equals_eig": joint.rank == R.rank == len(eig),
        "spectrum": {str(k): v for k, v in spect.items()},
        "spectrum_complete": sum(spect.values()) == dim_s2(n),
    }
    # weight ε1+ε2 highest-weight vectors (the adjoint-type constituent)
    N = sb.rank_of(n)
    if N >= 2:
        mu = (1, 1) + (0,) * (N - 2)
        hw = highest_weight_vectors(n, mu)
        rep["hw_eps12_dim"] = len(hw)
        rv = Echelon(sym_convert(r, "V").terms for r in r_span_sym(n))
        rep["hw_eps12_in_R"] = all(rv.contains(v) for v in hw)
    if decomposition:
        dec = s2_decomposition(n)
        rep["s2_decomposition"] = [
            {"weight": [str(c) for c in d["weight"]], "multiplicity": d["multiplicity"],
             "dimension": d["dimension"], "eigenvalues": [str(t) for t in d["eigenvalues"]]}
            for d in dec
        ]
        rep["s2_dimension_sum"] = sum(d["multiplicity"] * d["dimension"] for d in dec)
    return rep
