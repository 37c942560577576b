"""Concrete so(n+1) in two bases.

E family
    labels ``(a, b)`` with ``1 <= a < b <= n+1``; the label is the matrix
    e^{ab} = E_ab − E_ba (the image of e_a ∧ e_b).
V family
    labels ``(p, q)`` with ``-N <= p < q <= N`` (0 only when n+1 is odd); the
    label is the honest bilinear wedge v_p ∧ v_q, where
    v_{±j} = (e_{2j-1} ∓ i e_{2j})/√2 and v_0 = e_{2N+1}.

With these conventions ε_j = v_j ∧ v_{-j} = i e^{2j-1,2j}, so the Cartan
element ε_j is stored as ``-1 * (-j, j)``.  The root vector v_p ∧ v_q has
weight sign(p) ε_|p| + sign(q) ε_|q|.

Commutators in the V family are computed by transport through the E family.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .linalg import vec_iadd
from .scalar import I, INV_SQRT2, Scalar, simplify

Label = tuple[int, int]
Weight = tuple[Fraction, ...]

FAMILIES = ("E", "V")


def rank_of(n: int) -> int:
    """N = ⌊(n+1)/2⌋."""
    return (n + 1) // 2


def is_odd(n: int) -> bool:
    """True when n+1 is odd (type B)."""
    return (n + 1) % 2 == 1


def v_indices(n: int) -> list[int]:
    N = rank_of(n)
    idx = [p for p in range(-N, N + 1) if p != 0]
    if is_odd(n):
        idx = sorted(idx + [0])
    return idx


def e_labels(n: int) -> list[Label]:
    return list(itertools.combinations(range(1, n + 2), 2))


def v_labels(n: int) -> list[Label]:
    return list(itertools.combinations(v_indices(n), 2))


def labels(n: int, family: str) -> list[Label]:
    return e_labels(n) if family == "E" else v_labels(n)


def canon(p: int, q: int) -> tuple[int, Label | None]:
    """Canonical label for the wedge p∧q: (sign, label), sign 0 if p == q."""
    if p == q:
        return 0, None
    if p < q:
        return 1, (p, q)
    return -1, (q, p)


@dataclass(frozen=True)
class LieElt:
    n: int
    family: str
    terms: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown label family {self.family!r}")
        clean: dict = {}
        for (p, q), c in self.terms.items():
            s, lab = canon(p, q)
            if not s or not c:
                continue
            _check_label(self.n, self.family, lab)
            v = clean.get(lab, 0) + s * c
            if v:
                clean[lab] = v
            else:
                clean.pop(lab)
        object.__setattr__(self, "terms", {k: simplify(v) for k, v in clean.items()})

    @classmethod
    def basis(cls, n: int, family: str, p: int, q: int) -> "LieElt":
        return cls(n, family, {(p, q): 1})

    @classmethod
    def zero(cls, n: int, family: str) -> "LieElt":
        return cls(n, family, {})

    @classmethod
    def cartan(cls, n: int, j: int, family: str = "V") -> "LieElt":
        """ε_j = v_j ∧ v_{-j} = i e^{2j-1,2j}."""
        if family == "V":
            return cls(n, "V", {(j, -j): 1})
        return cls(n, "E", {(2 * j - 1, 2 * j): I})

    def _same(self, o: "LieElt"):
        if not isinstance(o, LieElt):
            raise TypeError("expected a LieElt")
        if o.n != self.n:
            raise ValueError("elements of so(n+1) for different n")
        if o.family != self.family:
            raise ValueError("mixed label families (E and V) in one expression")

    def __add__(self, o):
        self._same(o)
        t = dict(self.terms)
        vec_iadd(t, o.terms)
        return LieElt(self.n, self.family, t)

    def __neg__(self):
        return LieElt(self.n, self.family, {k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, s):
        if isinstance(s, LieElt):
            return NotImplemented
        return LieElt(self.n, self.family, {k: v * s for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, o):
        if not isinstance(o, LieElt):
            return NotImplemented
        return (self.n, self.family, self.terms) == (o.n, o.family, o.terms)

    def __hash__(self):
        return hash((self.n, self.family, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"0[{self.family}]"
        sym = "e" if self.family == "E" else "v"
        parts = [f"{c}*{sym}{k}" for k, c in sorted(self.terms.items())]
        return " + ".join(parts)


def _check_label(n: int, family: str, lab: Label):
    p, q = lab
    if family == "E":
        if not (1 <= p < q <= n + 1):
            raise ValueError(f"bad E label {lab} for n={n}")
    else:
        N = rank_of(n)
        if not (-N <= p < q <= N) or (0 in lab and not is_odd(n)):
            raise ValueError(f"bad V label {lab} for n={n}")


# --------------------------------------------------------------------------
# brackets
# --------------------------------------------------------------------------

def e_bracket(x: Label, y: Label) -> dict[Label, int]:
    """[e^{ab}, e^{cd}] = δ_bc e^{ad} − δ_ac e^{bd} − δ_bd e^{ac} + δ_ad e^{bc}."""
    (a, b), (c, d) = x, y
    out: dict = {}

    def put(p, q, s):
        sg, lab = canon(p, q)
        if sg:
            v = out.get(lab, 0) + s * sg
            if v:
                out[lab] = v
            else:
                out.pop(lab)

    if b == c:
        put(a, d, 1)
    if a == c:
        put(b, d, -1)
    if b == d:
        put(a, c, -1)
    if a == d:
        put(b, c, 1)
    return out


@lru_cache(maxsize=None)
def _v_bracket_table(n: int) -> dict[tuple[Label, Label], dict]:
    labs = v_labels(n)
    table = {}
    for x in labs:
        ex = _from_v_label(n, x)
        for y in labs:
            ey = _from_v_label(n, y)
            acc: dict = {}
            for kx, cx in ex.items():
                for ky, cy in ey.items():
                    for k, c in e_bracket(kx, ky).items():
                        vec_iadd(acc, {k: c * cx * cy})
            v: dict = {}
            for k, c in acc.items():
                vec_iadd(v, {kk: cc * c for kk, cc in _to_v_label(n, k).items()})
            table[(x, y)] = {k: simplify(c) for k, c in v.items() if c}
    return table


def label_bracket(n: int, family: str, x: Label, y: Label) -> dict:
    if family == "E":
        return e_bracket(x, y)
    return _v_bracket_table(n)[(x, y)]


def commutator(x: LieElt, y: LieElt) -> LieElt:
    x._same(y)
    out: dict = {}
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            for k, c in label_bracket(x.n, x.family, kx, ky).items():
                vec_iadd(out, {k: c * cx * cy})
    return LieElt(x.n, x.family, out)


def matrix_of(x: LieElt) -> list[list]:
    """(n+1)×(n+1) matrix of an E-family element; the oracle for the bracket."""
    if x.family != "E":
        x = from_v_basis(x)
    m = x.n + 1
    mat = [[0] * m for _ in range(m)]
    for (a, b), c in x.terms.items():
        mat[a - 1][b - 1] += c
        mat[b - 1][a - 1] -= c
    return mat


def matrix_commutator(p: list[list], q: list[list]) -> list[list]:
    m = len(p)
    pq = [[sum(p[i][k] * q[k][j] for k in range(m)) for j in range(m)] for i in range(m)]
    qp = [[sum(q[i][k] * p[k][j] for k in range(m)) for j in range(m)] for i in range(m)]
    return [[simplify(pq[i][j] - qp[i][j]) for j in range(m)] for i in range(m)]


def v_bracket_direct(x: Label, y: Label) -> dict[Label, int]:
    """Second source for V-family brackets, from (v_p, v_q) = δ_{p+q,0}:
    [a∧b, c∧d] = B(b,c) a∧d − B(a,c) b∧d − B(b,d) a∧c + B(a,d) b∧c.
    Used only as a test oracle."""
    (a, b), (c, d) = x, y

    def B(u, w):
        return 1 if u + w == 0 else 0

    out: dict = {}
    for coef, (p, q) in ((B(b, c), (a, d)), (-B(a, c), (b, d)), (-B(b, d), (a, c)), (B(a, d), (b, c))):
        if coef:
            s, lab = canon(p, q)
            if s:
                vec_iadd(out, {lab: s * coef})
    return out


# --------------------------------------------------------------------------
# basis change
# --------------------------------------------------------------------------

def e_vector_in_v(n: int, a: int) -> dict[int, object]:
    """Coordinates of e_a in the v basis."""
    N = rank_of(n)
    if is_odd(n) and a == 2 * N + 1:
        return {0: 1}
    j = (a + 1) // 2
    if a % 2 == 1:
        # e_{2j-1} = (v_j + v_{-j})/√2
        return {j: INV_SQRT2, -j: INV_SQRT2}
    # e_{2j} = i (v_j − v_{-j})/√2
    c = I * INV_SQRT2
    return {j: c, -j: -c}


def v_vector_in_e(n: int, p: int) -> dict[int, object]:
    """Coordinates of v_p in the e basis."""
    N = rank_of(n)
    if p == 0:
        if not is_odd(n):
            raise ValueError("v_0 exists only when n+1 is odd")
        return {2 * N + 1: 1}
    j = abs(p)
    nu = 1 if p > 0 else -1
    # v_{νj} = (e_{2j-1} − iν e_{2j})/√2
    return {2 * j - 1: INV_SQRT2, 2 * j: -nu * I * INV_SQRT2}


def _wedge_coords(u: dict, w: dict) -> dict[Label, object]:
    out: dict = {}
    for p, cu in u.items():
        for q, cw in w.items():
            s, lab = canon(p, q)
            if s:
                vec_iadd(out, {lab: s * cu * cw})
    return {k: simplify(c) for k, c in out.items() if c}


@lru_cache(maxsize=None)
def _to_v_cache(n: int) -> dict[Label, dict]:
    return {(a, b): _wedge_coords(e_vector_in_v(n, a), e_vector_in_v(n, b)) for a, b in e_labels(n)}


@lru_cache(maxsize=None)
def _from_v_cache(n: int) -> dict[Label, dict]:
    return {(p, q): _wedge_coords(v_vector_in_e(n, p), v_vector_in_e(n, q)) for p, q in v_labels(n)}


def _to_v_label(n: int, lab: Label) -> dict:
    return _to_v_cache(n)[lab]


def _from_v_label(n: int, lab: Label) -> dict:
    return _from_v_cache(n)[lab]


def to_v_basis(x: LieElt) -> LieElt:
    if x.family != "E":
        raise ValueError("to_v_basis expects an E-family element")
    out: dict = {}
    for k, c in x.terms.items():
        vec_iadd(out, {kk: cc * c for kk, cc in _to_v_label(x.n, k).items()})
    return LieElt(x.n, "V", out)


def from_v_basis(x: LieElt) -> LieElt:
    if x.family != "V":
        raise ValueError("from_v_basis expects a V-family element")
    out: dict = {}
    for k, c in x.terms.items():
        vec_iadd(out, {kk: cc * c for kk, cc in _from_v_label(x.n, k).items()})
    return LieElt(x.n, "E", out)


def convert(x: LieElt, family: str) -> LieElt:
    if x.family == family:
        return x
    return to_v_basis(x) if family == "V" else from_v_basis(x)


# --------------------------------------------------------------------------
# weights and roots
# --------------------------------------------------------------------------

def index_weight(n: int, p: int) -> Weight:
    N = rank_of(n)
    w = [Fraction(0)] * N
    if p:
        w[abs(p) - 1] = Fraction(1 if p > 0 else -1)
    return tuple(w)


def add_weights(*ws: Weight) -> Weight:
    return tuple(sum(c) for c in zip(*ws))


def weight_of(n: int, label: Label) -> Weight:
    """Weight of the V-family basis vector ``label``; Cartan labels give 0."""
    p, q = label
    _check_label(n, "V", label)
    return add_weights(index_weight(n, p), index_weight(n, q))


def is_positive(w: Weight) -> bool:
    for c in w:
        if c:
            return c > 0
    return False


def is_zero_weight(w: Weight) -> bool:
    return not any(w)


@dataclass(frozen=True)
class RootSystem:
    n: int
    N: int
    odd: bool
    roots: tuple[Weight, ...]
    simple_roots: tuple[Weight, ...]
    positive_labels: tuple[Label, ...]
    negative_labels: tuple[Label, ...]
    cartan_labels: tuple[Label, ...]

    @property
    def positive_roots(self) -> list[Weight]:
        return [r for r in self.roots if is_positive(r)]

    @property
    def rho(self) -> Weight:
        pos = self.positive_roots
        return tuple(Fraction(sum(r[i] for r in pos), 2) for i in range(self.N))

    def coroot_pairing(self, lam: Sequence, alpha: Weight):
        """⟨λ, α^∨⟩ = 2(λ,α)/(α,α) for the standard form (ε_i|ε_j) = δ_ij."""
        return Fraction(2) * sum(x * y for x, y in zip(lam, alpha)) / sum(a * a for a in alpha)

    def weyl_dimension(self, lam: Sequence) -> Fraction:
        rho = self.rho
        num = den = Fraction(1)
        for a in self.positive_roots:
            num *= sum((Fraction(l) + r) * x for l, r, x in zip(lam, rho, a))
            den *= sum(r * x for r, x in zip(rho, a))
        return num / den


def _eps(N: int, i: int, s: int = 1) -> Weight:
    w = [Fraction(0)] * N
    w[i] = Fraction(s)
    return tuple(w)


@lru_cache(maxsize=None)
def root_system(n: int) -> RootSystem:
    if n < 3:
        raise ValueError("n >= 3 required")
    N = rank_of(n)
    odd = is_odd(n)
    roots = set()
    for i in range(N):
        for j in range(N):
            if i == j:
                continue
            for s1 in (1, -1):
                for s2 in (1, -1):
                    roots.add(add_weights(_eps(N, i, s1), _eps(N, j, s2)))
    if odd:
        for i in range(N):
            roots.add(_eps(N, i, 1))
            roots.add(_eps(N, i, -1))
    simple = [add_weights(_eps(N, i), _eps(N, i + 1, -1)) for i in range(N - 1)]
    if odd:
        simple.append(_eps(N, N - 1))
    else:
        simple.append(add_weights(_eps(N, N - 2), _eps(N, N - 1)))
    pos, neg, cart = [], [], []
    for lab in v_labels(n):
        w = weight_of(n, lab)
        if is_zero_weight(w):
            cart.append(lab)
        elif is_positive(w):
            pos.append(lab)
        else:
            neg.append(lab)
    return RootSystem(n, N, odd, tuple(sorted(roots, reverse=True)), tuple(simple),
                      tuple(pos), tuple(neg), tuple(cart))


def label_class(n: int, lab: Label) -> int:
    """0 lowering, 1 Cartan, 2 raising."""
    w = weight_of(n, lab)
    if is_zero_weight(w):
        return 1
    return 2 if is_positive(w) else 0
