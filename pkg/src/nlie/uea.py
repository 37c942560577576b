"""Enveloping algebra U(so(n+1)), the quadratic relations and S²(so(n+1)).

Elements of U are stored in PBW normal form.  In the E family the factors
of a monomial are sorted lexicographically by label; in the V family they
are sorted lowering < Cartan < raising (then by label), which is the order
the highest-weight projection wants.  Normal ordering is the usual adjacent
swap xy → yx + [x,y].
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from . import so_basis as sb
from .linalg import Echelon, intersection_dim, kernel_of_map, vec_iadd
from .nlie_core import WedgeElt, sort_with_sign
from .scalar import simplify
from .so_basis import Label, LieElt

Word = tuple  # tuple of labels


# --------------------------------------------------------------------------
# normal ordering
# --------------------------------------------------------------------------

def order_key(n: int, family: str) -> Callable[[Label], tuple]:
    if family == "E":
        return lambda lab: lab
    return lambda lab: (sb.label_class(n, lab), lab)


_MEMO: dict = {}


def _canon_word(word) -> tuple[int, Word | None]:
    sign, out = 1, []
    for p, q in word:
        s, lab = sb.canon(p, q)
        if not s:
            return 0, None
        sign *= s
        out.append(lab)
    return sign, tuple(out)


def _first_descent(word: Word, key) -> int:
    for i in range(len(word) - 1):
        if key(word[i]) > key(word[i + 1]):
            return i
    return -1


def normal_order(n: int, family: str, word: Word, rng: random.Random | None = None) -> dict:
    """PBW normal form of a single monomial, as ``{sorted word: coeff}``.

    With ``rng`` given, the descent to swap is chosen at random instead of
    leftmost, and nothing is memoized; used to test confluence.
    """
    key = order_key(n, family)
    memo = None if rng is not None else _MEMO.setdefault((n, family), {})
    return _normal(n, family, tuple(word), key, memo, rng)


def _normal(n, family, word, key, memo, rng):
    if memo is not None and word in memo:
        return memo[word]
    if rng is None:
        i = _first_descent(word, key)
    else:
        ds = [j for j in range(len(word) - 1) if key(word[j]) > key(word[j + 1])]
        i = rng.choice(ds) if ds else -1
    if i < 0:
        out = {word: 1}
    else:
        x, y = word[i], word[i + 1]
        out = dict(_normal(n, family, word[:i] + (y, x) + word[i + 2:], key, memo, rng))
        for lab, c in sb.label_bracket(n, family, x, y).items():
            sub = _normal(n, family, word[:i] + (lab,) + word[i + 2:], key, memo, rng)
            vec_iadd(out, sub, c)
    if memo is not None:
        memo[word] = out
    return out


@dataclass(frozen=True)
class UElt:
    n: int
    family: str = "E"
    terms: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.family not in sb.FAMILIES:
            raise ValueError(f"unknown label family {self.family!r}")
        object.__setattr__(self, "terms", {w: simplify(c) for w, c in self.terms.items() if c})

    @classmethod
    def one(cls, n: int, family: str = "E") -> "UElt":
        return cls(n, family, {(): 1})

    @classmethod
    def from_lie(cls, x: LieElt) -> "UElt":
        return cls(x.n, x.family, {(k,): c for k, c in x.terms.items()})

    @classmethod
    def word(cls, n: int, family: str, *labels: Label) -> "UElt":
        return pbw_normalize(n, {tuple(labels): 1}, family)

    def _same(self, o):
        if not isinstance(o, UElt):
            raise TypeError("expected a UElt")
        if (o.n, o.family) != (self.n, self.family):
            raise ValueError("UElts over different n or label families")

    def __add__(self, o):
        self._same(o)
        t = dict(self.terms)
        vec_iadd(t, o.terms)
        return UElt(self.n, self.family, t)

    def __neg__(self):
        return UElt(self.n, self.family, {w: -c for w, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, UElt):
            return u_multiply(self, o)
        if not o:
            return UElt(self.n, self.family, {})
        return UElt(self.n, self.family, {w: c * o for w, c in self.terms.items()})

    def __rmul__(self, s):
        return self * s

    def __eq__(self, o):
        if not isinstance(o, UElt):
            return NotImplemented
        return (self.n, self.family, self.terms) == (o.n, o.family, o.terms)

    def __hash__(self):
        return hash((self.n, self.family, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "UElt":
        return UElt(self.n, self.family, {w: c for w, c in self.terms.items() if len(w) == d})

    def __repr__(self):
        if not self.terms:
            return "0"
        sym = "e" if self.family == "E" else "v"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])):
            mono = "".join(f"{sym}{a},{b}".replace(f"{sym}", f"{sym}(") + ")" for a, b in w) or "1"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def pbw_normalize(n: int, raw, family: str = "E", rng: random.Random | None = None) -> UElt:
    """Normal form of a raw combination ``{word: coeff}`` (or iterable of
    ``(coeff, word)``).  Labels may be given unordered; (b,a) means −(a,b)."""
    items = raw.items() if isinstance(raw, dict) else ((w, c) for c, w in raw)
    out: dict = {}
    for word, c in items:
        s, w = _canon_word(word)
        if not s or not c:
            continue
        vec_iadd(out, normal_order(n, family, w, rng), s * c)
    return UElt(n, family, out)


def u_multiply(x: UElt, y: UElt) -> UElt:
    x._same(y)
    raw: dict = {}
    for wx, cx in x.terms.items():
        for wy, cy in y.terms.items():
            vec_iadd(raw, {wx + wy: cx * cy})
    return pbw_normalize(x.n, raw, x.family)


def u_convert(u: UElt, family: str) -> UElt:
    """Rewrite every factor in the other label family and renormalize."""
    if u.family == family:
        return u
    out = UElt(u.n, family, {})
    for w, c in u.terms.items():
        prod = UElt.one(u.n, family)
        for lab in w:
            prod = prod * UElt.from_lie(sb.convert(LieElt.basis(u.n, u.family, *lab), family))
        out = out + prod * c
    return out


# --------------------------------------------------------------------------
# generators of Q(A)
# --------------------------------------------------------------------------

def qa_generator(n: int, i: int, k: int, l: int, m: int) -> UElt:
    """x_{i,k,l,m} = e^{ik}e^{lm} − e^{il}e^{km} + e^{im}e^{kl} (indices distinct)."""
    if len({i, k, l, m}) < 4:
        return UElt(n, "E", {})
    raw = [(1, ((i, k), (l, m))), (-1, ((i, l), (k, m))), (1, ((i, m), (k, l)))]
    return pbw_normalize(n, raw)


def qa_generators(n: int) -> list[UElt]:
    if n < 3:
        raise ValueError("n >= 3 required")
    return [qa_generator(n, *s) for s in itertools.combinations(range(1, n + 2), 4)]


def qa_generator_antisymmetrized(n: int, idx: tuple[int, int, int, int]) -> UElt:
    """(1/8) Σ_{σ∈S4} sgn(σ) e^{iσ1 iσ2} e^{iσ3 iσ4}."""
    raw: dict = {}
    for perm in itertools.permutations(range(4)):
        sgn, _ = sort_with_sign(perm)
        a, b, c, d = (idx[p] for p in perm)
        if a == b or c == d:
            continue
        vec_iadd(raw, {((a, b), (c, d)): Fraction(sgn, 8)})
    return pbw_normalize(n, raw)


# --------------------------------------------------------------------------
# S²(so(n+1))
# --------------------------------------------------------------------------

def _pair(x: Label, y: Label) -> tuple[Label, Label]:
    return (x, y) if x <= y else (y, x)


@dataclass(frozen=True)
class SymElt:
    n: int
    family: str = "E"
    terms: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        clean: dict = {}
        for (x, y), c in self.terms.items():
            sx, x = sb.canon(*x)
            sy, y = sb.canon(*y)
            if sx and sy and c:
                vec_iadd(clean, {_pair(x, y): sx * sy * c})
        object.__setattr__(self, "terms", {k: simplify(c) for k, c in clean.items() if c})

    @classmethod
    def basis(cls, n: int, x: Label, y: Label, family: str = "E") -> "SymElt":
        return cls(n, family, {(x, y): 1})

    def _same(self, o):
        if not isinstance(o, SymElt):
            raise TypeError("expected a SymElt")
        if (o.n, o.family) != (self.n, self.family):
            raise ValueError("SymElts over different n or label families")

    def __add__(self, o):
        self._same(o)
        t = dict(self.terms)
        vec_iadd(t, o.terms)
        return SymElt(self.n, self.family, t)

    def __neg__(self):
        return SymElt(self.n, self.family, {k: -c for k, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, s):
        return SymElt(self.n, self.family, {k: c * s for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, o):
        if not isinstance(o, SymElt):
            return NotImplemented
        return (self.n, self.family, self.terms) == (o.n, o.family, o.terms)

    def __hash__(self):
        return hash((self.n, self.family, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        sym = "e" if self.family == "E" else "v"
        return " + ".join(f"{c}*{sym}{x}⊙{sym}{y}" for (x, y), c in sorted(self.terms.items()))


def sym(x: LieElt, y: LieElt) -> SymElt:
    x._same(y)
    out: dict = {}
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            vec_iadd(out, {_pair(kx, ky): cx * cy})
    return SymElt(x.n, x.family, out)


def s2_basis(n: int, family: str = "E") -> list[tuple[Label, Label]]:
    return list(itertools.combinations_with_replacement(sb.labels(n, family), 2))


def dim_s2(n: int) -> int:
    m = n + 1
    return 3 * comb(m, 4) + 3 * comb(m, 3) + comb(m, 2)


def sym_convert(s: SymElt, family: str) -> SymElt:
    if s.family == family:
        return s
    out: dict = {}
    for (x, y), c in s.terms.items():
        fx = sb.convert(LieElt.basis(s.n, s.family, *x), family)
        fy = sb.convert(LieElt.basis(s.n, s.family, *y), family)
        vec_iadd(out, sym(fx, fy).terms, c)
    return SymElt(s.n, family, out)


def sym_of_uelt(u: UElt) -> SymElt:
    """Top (degree-2) symbol of a degree ≤ 2 element: xy ↦ x⊙y."""
    if u.degree() > 2:
        raise ValueError("degree > 2")
    out: dict = {}
    for w, c in u.terms.items():
        if len(w) == 2:
            vec_iadd(out, {_pair(*w): c})
    return SymElt(u.n, u.family, out)


def uelt_of_sym(s: SymElt) -> UElt:
    """Symmetrized lift x⊙y ↦ (xy + yx)/2."""
    raw: dict = {}
    for (x, y), c in s.terms.items():
        vec_iadd(raw, {(x, y): Fraction(1, 2) * c})
        vec_iadd(raw, {(y, x): Fraction(1, 2) * c})
    return pbw_normalize(s.n, raw, s.family)


def adjoint_on_sym(g: LieElt, s: SymElt) -> SymElt:
    """g·(x⊙y) = [g,x]⊙y + x⊙[g,y]."""
    if (g.n, g.family) != (s.n, s.family):
        raise ValueError("mismatched n or family")
    out: dict = {}
    for (x, y), c in s.terms.items():
        for lab, gc in g.terms.items():
            for z, bc in sb.label_bracket(s.n, s.family, lab, x).items():
                vec_iadd(out, {_pair(z, y): c * gc * bc})
            for z, bc in sb.label_bracket(s.n, s.family, lab, y).items():
                vec_iadd(out, {_pair(x, z): c * gc * bc})
    return SymElt(s.n, s.family, out)


def action_on_vector(g: LieElt, w: WedgeElt) -> WedgeElt:
    """so(n+1) acting on ∧^k A as derivations, e^{ab}·e_c = δ_bc e_a − δ_ac e_b."""
    if g.family != "E":
        g = sb.from_v_basis(g)
    out: dict = {}
    for idx, c in w.terms.items():
        for pos, ic in enumerate(idx):
            for (a, b), gc in g.terms.items():
                for tgt, s in ((a, 1) if b == ic else (None, 0), (b, -1) if a == ic else (None, 0)):
                    if tgt is None:
                        continue
                    new = idx[:pos] + (tgt,) + idx[pos + 1:]
                    vec_iadd(out, {new: c * gc * s})
    return WedgeElt(w.n, w.grade, out)


def psi_map(w: WedgeElt) -> SymElt:
    """e_i∧e_j∧e_k∧e_l ↦ e^{ij}⊙e^{kl} − e^{ik}⊙e^{jl} + e^{il}⊙e^{jk}."""
    if w.grade != 4:
        raise ValueError("psi_map expects a grade-4 element")
    out: dict = {}
    for (i, j, k, l), c in w.terms.items():
        for s, x, y in ((1, (i, j), (k, l)), (-1, (i, k), (j, l)), (1, (i, l), (j, k))):
            vec_iadd(out, {_pair(x, y): s * c})
    return SymElt(w.n, "E", out)


def phi_map(s: SymElt) -> WedgeElt:
    """e^{ab}⊙e^{cd} ↦ e_a∧e_b∧e_c∧e_d."""
    if s.family != "E":
        s = sym_convert(s, "E")
    out: dict = {}
    for ((a, b), (c, d)), coef in s.terms.items():
        sign, key = sort_with_sign((a, b, c, d))
        if sign:
            vec_iadd(out, {key: sign * coef})
    return WedgeElt(s.n, 4, out)


def r_span_sym(n: int) -> list[SymElt]:
    """R inside S², read off from the U-elements x_{i,k,l,m}."""
    return [sym_of_uelt(x) for x in qa_generators(n)]


def psi_image(n: int) -> list[SymElt]:
    return [psi_map(WedgeElt(n, 4, {s: 1})) for s in itertools.combinations(range(1, n + 2), 4)]


def ker_phi(n: int) -> list[dict]:
    basis = s2_basis(n)

    def apply(key):
        return phi_map(SymElt(n, "E", {key: 1})).terms

    return kernel_of_map(basis, apply)


def _left_ideal_deg3(n: int, gens: list[UElt]) -> Echelon:
    ech = Echelon()
    for r in gens:
        ech.add(r.terms)
    for lab in sb.e_labels(n):
        u = UElt.from_lie(LieElt.basis(n, "E", *lab))
        for r in gens:
            ech.add((u * r).terms)
    return ech


def check_R_structure(n: int) -> dict:
    """(a) [so(n+1), R] ⊆ R; (b) dim R; (c) R = ψ(∧⁴A); (d) S² = R ⊕ Ker φ;
    (e) right multiples r·u lie in the left ideal, truncated at degree 3."""
    labs = sb.e_labels(n)
    R = r_span_sym(n)
    ech_r = Echelon(r.terms for r in R)
    bad_a = []
    for lab in labs:
        g = LieElt.basis(n, "E", *lab)
        for idx, r in zip(itertools.combinations(range(1, n + 2), 4), R):
            if not ech_r.contains(adjoint_on_sym(g, r).terms):
                bad_a.append((lab, idx))
    dim_r = ech_r.rank
    psi = [p.terms for p in psi_image(n)]
    rank_psi = Echelon(psi).rank
    rank_union = Echelon([r.terms for r in R] + psi).rank
    kern = ker_phi(n)
    inter = intersection_dim([r.terms for r in R], kern)
    gens = qa_generators(n)
    left = _left_ideal_deg3(n, gens)
    bad_e = []
    for lab in labs:
        u = UElt.from_lie(LieElt.basis(n, "E", *lab))
        for r in gens:
            if not left.contains((r * u).terms):
                bad_e.append(lab)
    return {
        "n": n,
        "adjoint_pairs": len(labs) * len(R),
        "adjoint_failures": bad_a[:5],
        "dim_R": dim_r,
        "expected_dim_R": comb(n + 1, 4),
        "R_equals_psi_image": dim_r == rank_psi == rank_union,
        "dim_S2": len(s2_basis(n)),
        "expected_dim_S2": dim_s2(n),
        "dim_ker_phi": len(kern),
        "dim_R_cap_ker_phi": inter,
        "direct_sum": inter == 0 and dim_r + len(kern) == len(s2_basis(n)),
        "right_ideal_degree": 3,
        "right_ideal_failures": len(bad_e),
        "ok": (not bad_a and dim_r == comb(n + 1, 4) and dim_r == rank_psi == rank_union
               and inter == 0 and dim_r + len(kern) == dim_s2(n) and not bad_e),
    }


def phi_psi_check(n: int) -> int:
    """Number of ∧⁴ basis monomials where φ∘ψ ≠ 3·Id (expected 0)."""
    bad = 0
    for s in itertools.combinations(range(1, n + 2), 4):
        w = WedgeElt(n, 4, {s: 1})
        if phi_map(psi_map(w)) != w * 3:
            bad += 1
    return bad


def random_lie(n: int, rng: random.Random, bound: int = 2) -> LieElt:
    return LieElt(n, "E", {lab: rng.randint(-bound, bound) for lab in sb.e_labels(n)})


def psi_equivariance(n: int, trials: int = 100, seed: int = 0) -> int:
    """Failures of ψ(g·w) = g·ψ(w) on random pairs."""
    from .nlie_core import random_wedge

    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        g = random_lie(n, rng)
        w = random_wedge(n, 4, rng)
        if psi_map(action_on_vector(g, w)) != adjoint_on_sym(g, psi_map(w)):
            bad += 1
    return bad


def kernel_submodule_failures(n: int) -> int:
    """Basis g and spanning vectors k of Ker φ with g·k ∉ Ker φ."""
    bad = 0
    for vec in ker_phi(n):
        s = SymElt(n, "E", vec)
        for lab in sb.e_labels(n):
            if phi_map(adjoint_on_sym(LieElt.basis(n, "E", *lab), s)):
                bad += 1
    return bad


def span_rank(elts: Iterable) -> int:
    return Echelon(e.terms for e in elts).rank
