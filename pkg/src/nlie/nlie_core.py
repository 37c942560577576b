"""The simple n-Lie algebra A = C^{n+1} and its basic Lie algebra.

Exterior algebra elements are sparse maps from strictly increasing index
tuples (indices ``1..n+1``) to coefficients.  The n-ary bracket is the
generalized vector product: the Hodge star of the wedge of the arguments.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import vec_iadd
from .scalar import simplify


def sort_with_sign(idx: Sequence) -> tuple[int, tuple]:
    """Sort ``idx`` and return (sign of the sorting permutation, sorted tuple).

    The sign is 0 when an index repeats.
    """
    a = list(idx)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(a)):
        j = i
        while j > 0 and a[j - 1] > a[j]:
            a[j - 1], a[j] = a[j], a[j - 1]
            sign = -sign
            j -= 1
    for x, y in zip(a, a[1:]):
        if x == y:
            return 0, tuple(a)
    return sign, tuple(a)


@dataclass(frozen=True)
class WedgeElt:
    """Element of ∧^grade C^{n+1}."""

    n: int
    grade: int
    terms: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        clean = {}
        for idx, c in self.terms.items():
            if len(idx) != self.grade:
                raise ValueError(f"index tuple {idx} does not have grade {self.grade}")
            if any(not 1 <= i <= self.n + 1 for i in idx):
                raise ValueError(f"index out of range in {idx}")
            s, key = sort_with_sign(idx)
            if not s or not c:
                continue
            v = clean.get(key, 0) + s * c
            if v:
                clean[key] = v
            else:
                clean.pop(key)
        object.__setattr__(self, "terms", {k: simplify(v) for k, v in clean.items()})

    @classmethod
    def basis(cls, n: int, *idx: int) -> "WedgeElt":
        return cls(n, len(idx), {tuple(idx): 1})

    @classmethod
    def vector(cls, n: int, coords: Sequence) -> "WedgeElt":
        if len(coords) != n + 1:
            raise ValueError("vector needs n+1 coordinates")
        return cls(n, 1, {(i + 1,): c for i, c in enumerate(coords) if c})

    @classmethod
    def zero(cls, n: int, grade: int) -> "WedgeElt":
        return cls(n, grade, {})

    @property
    def dim(self) -> int:
        return self.n + 1

    def coords(self) -> list:
        if self.grade != 1:
            raise ValueError("coords() only for grade 1")
        return [self.terms.get((i,), 0) for i in range(1, self.n + 2)]

    def __eq__(self, o):
        if not isinstance(o, WedgeElt):
            return NotImplemented
        return self.n == o.n and self.grade == o.grade and self.terms == o.terms

    def __hash__(self):
        return hash((self.n, self.grade, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def _check(self, o: "WedgeElt"):
        if not isinstance(o, WedgeElt) or o.n != self.n or o.grade != self.grade:
            raise ValueError("wedge elements of different n or grade")

    def __add__(self, o):
        self._check(o)
        t = dict(self.terms)
        vec_iadd(t, o.terms)
        return WedgeElt(self.n, self.grade, t)

    def __sub__(self, o):
        return self + (-o)

    def __neg__(self):
        return WedgeElt(self.n, self.grade, {k: -v for k, v in self.terms.items()})

    def __mul__(self, s):
        if isinstance(s, WedgeElt):
            return NotImplemented
        return WedgeElt(self.n, self.grade, {k: v * s for k, v in self.terms.items()})

    __rmul__ = __mul__

    def wedge(self, o: "WedgeElt") -> "WedgeElt":
        if o.n != self.n:
            raise ValueError("wedge of elements with different n")
        g = self.grade + o.grade
        if g > self.n + 1:
            return WedgeElt.zero(self.n, g)
        out: dict = {}
        for a, x in self.terms.items():
            for b, y in o.terms.items():
                s, key = sort_with_sign(a + b)
                if s:
                    v = out.get(key, 0) + s * x * y
                    if v:
                        out[key] = v
                    else:
                        out.pop(key)
        return WedgeElt(self.n, g, out)

    def __xor__(self, o):
        return self.wedge(o)

    def __repr__(self):
        if not self.terms:
            return f"0[∧^{self.grade}]"
        parts = []
        for k in sorted(self.terms):
            name = "∧".join(f"e{i}" for i in k) or "1"
            parts.append(f"{self.terms[k]}*{name}")
        return " + ".join(parts)


def wedge_all(elts: Iterable[WedgeElt], n: int) -> WedgeElt:
    out = WedgeElt(n, 0, {(): 1})
    for e in elts:
        out = out.wedge(e)
    return out


def orientation(n: int) -> WedgeElt:
    return WedgeElt.basis(n, *range(1, n + 2))


def hodge_star(w: WedgeElt) -> WedgeElt:
    """Complement-index Hodge star with e_S ∧ *(e_S) = e_1∧…∧e_{n+1}."""
    n = w.n
    if not 0 <= w.grade <= n + 1:
        raise ValueError("grade out of range")
    full = range(1, n + 2)
    out = {}
    for s_idx, c in w.terms.items():
        comp = tuple(i for i in full if i not in s_idx)
        sign, _ = sort_with_sign(s_idx + comp)
        out[comp] = sign * c
    return WedgeElt(n, n + 1 - w.grade, out)


def n_bracket(args: Sequence[WedgeElt], n: int) -> WedgeElt:
    """[x_1, …, x_n] = *(x_1 ∧ … ∧ x_n) for vectors x_i of A."""
    if len(args) != n:
        raise ValueError(f"the bracket takes exactly {n} arguments, got {len(args)}")
    for a in args:
        if a.grade != 1 or a.n != n:
            raise ValueError("bracket arguments must be grade-1 elements of C^{n+1}")
    return hodge_star(wedge_all(args, n))


def n_bracket_table(args: Sequence[WedgeElt], n: int) -> WedgeElt:
    """Independent route: expand by multilinearity and use the basis table

        [e_1, …, ê_i, …, e_{n+1}] = (-1)^{n+i+1} e_i

    via the minor of the coefficient matrix that omits row ``i``.
    """
    if len(args) != n:
        raise ValueError(f"the bracket takes exactly {n} arguments, got {len(args)}")
    cols = [a.coords() for a in args]
    out = {}
    for i in range(1, n + 2):
        rows = [r for r in range(n + 1) if r != i - 1]
        minor = [[cols[j][r] for j in range(n)] for r in rows]
        det = _det(minor)
        if det:
            out[(i,)] = (-1) ** (n + i + 1) * det
    return WedgeElt(n, 1, out)


def _det(m: list[list]):
    """Exact determinant by elimination on a copy."""
    size = len(m)
    if size == 0:
        return 1
    a = [list(r) for r in m]
    det = 1
    for c in range(size):
        piv = next((r for r in range(c, size) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        p = a[c][c]
        det = det * p
        for r in range(c + 1, size):
            if a[r][c]:
                f = _frac(a[r][c], p)
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return simplify(det)


def _frac(x, y):
    if isinstance(x, int) and isinstance(y, int):
        return Fraction(x, y)
    return x / y


def ad_vector(a: WedgeElt, b: WedgeElt) -> WedgeElt:
    """ad(a)(b) = [a_1, …, a_{n-1}, b] for a ∈ ∧^{n-1}A, b ∈ A."""
    if a.grade != a.n - 1 or b.grade != 1:
        raise ValueError("ad expects a grade n-1 element and a vector")
    return hodge_star(a.wedge(b))


def ad_tilde(a: WedgeElt, target: WedgeElt) -> WedgeElt:
    """Derivation extension of ad(a) to ∧^m A."""
    n = a.n
    if a.grade != n - 1:
        raise ValueError("ad_tilde expects a grade n-1 element")
    m = target.grade
    out: dict = {}
    images = {}
    for idx, c in target.terms.items():
        for pos, i in enumerate(idx):
            if i not in images:
                images[i] = ad_vector(a, WedgeElt.basis(n, i)).terms
            for (j,), v in images[i].items():
                s, key = sort_with_sign(idx[:pos] + (j,) + idx[pos + 1:])
                if s:
                    vec_iadd(out, {key: s * v * c})
    return WedgeElt(n, m, out)


def basic_bracket(a: WedgeElt, b: WedgeElt) -> WedgeElt:
    """[a, b] = ½(ãd(a)(b) − ãd(b)(a)) on ∧^{n-1}A."""
    if a.grade != a.n - 1 or b.grade != b.n - 1:
        raise ValueError("basic bracket is defined on grade n-1")
    return (ad_tilde(a, b) - ad_tilde(b, a)) * Fraction(1, 2)


def random_vector(n: int, rng: random.Random, bound: int = 3) -> WedgeElt:
    return WedgeElt.vector(n, [rng.randint(-bound, bound) for _ in range(n + 1)])


def random_wedge(n: int, grade: int, rng: random.Random, bound: int = 3) -> WedgeElt:
    keys = list(itertools.combinations(range(1, n + 2), grade))
    return WedgeElt(n, grade, {k: rng.randint(-bound, bound) for k in keys})


# --------------------------------------------------------------------------
# checks
# --------------------------------------------------------------------------

def jacobi_sides(xs: Sequence[WedgeElt], n: int) -> tuple[WedgeElt, WedgeElt]:
    """Both sides of the generalized Jacobi identity for 2n-1 vectors."""
    inner, outer = list(xs[:n]), list(xs[n:])
    lhs = n_bracket([n_bracket(inner, n)] + outer, n)
    rhs = WedgeElt.zero(n, 1)
    for i in range(n):
        args = list(inner)
        args[i] = n_bracket([inner[i]] + outer, n)
        rhs = rhs + n_bracket(args, n)
    return lhs, rhs


def check_generalized_jacobi(n: int, trials: int = 200, seed: int = 0, exhaustive: bool = False) -> dict:
    if n < 3:
        raise ValueError("n-Lie algebras need n >= 3")
    rng = random.Random(seed)
    failures = []
    tested = 0
    tuples: Iterable
    if exhaustive:
        basis = [WedgeElt.basis(n, i) for i in range(1, n + 2)]
        # antisymmetry within the inner and the outer slots: sorted distinct picks suffice
        tuples = (
            [basis[i - 1] for i in inner] + [basis[i - 1] for i in outer]
            for inner in itertools.combinations(range(1, n + 2), n)
            for outer in itertools.combinations(range(1, n + 2), n - 1)
        )
    else:
        tuples = ([random_vector(n, rng) for _ in range(2 * n - 1)] for _ in range(trials))
    for xs in tuples:
        lhs, rhs = jacobi_sides(xs, n)
        tested += 1
        if lhs != rhs:
            failures.append([x.coords() for x in xs])
    return {"n": n, "tested": tested, "failures": len(failures), "counterexamples": failures[:3]}


def check_ad_homomorphism(n: int, trials: int = 100, seed: int = 0) -> dict:
    """Jacobi for the basic bracket, the ãd homomorphism identity, and the
    transport to so(n+1) through the Hodge star."""
    from . import so_basis

    rng = random.Random(seed)
    g = n - 1
    jac_fail = hom_fail = 0
    for _ in range(trials):
        a, b, c = (random_wedge(n, g, rng) for _ in range(3))
        jac = (basic_bracket(a, basic_bracket(b, c))
               + basic_bracket(b, basic_bracket(c, a))
               + basic_bracket(c, basic_bracket(a, b)))
        if jac:
            jac_fail += 1
        v = random_vector(n, rng)
        lhs = ad_vector(basic_bracket(a, b), v)
        rhs = ad_vector(a, ad_vector(b, v)) - ad_vector(b, ad_vector(a, v))
        if lhs != rhs:
            hom_fail += 1
    transport_fail = []
    labels = list(itertools.combinations(range(1, n + 2), g))
    for s in labels:
        for t in labels:
            a, b = WedgeElt(n, g, {s: 1}), WedgeElt(n, g, {t: 1})
            lhs = hodge_transport(basic_bracket(a, b))
            rhs = so_basis.commutator(hodge_transport(a), hodge_transport(b))
            if lhs != rhs:
                transport_fail.append((s, t))
    return {
        "n": n,
        "trials": trials,
        "jacobi_failures": jac_fail,
        "homomorphism_failures": hom_fail,
        "transport_pairs": len(labels) ** 2,
        "transport_failures": len(transport_fail),
    }


def hodge_transport(a: WedgeElt):
    """The Lie algebra isomorphism ∧^{n-1}A → so(n+1), a ↦ −*(a).

    The matrix of ad(a) on A is −*(a) read as Σ c_ij (E_ij − E_ji); the plain
    star is therefore an anti-isomorphism and the minus sign is required.
    """
    from .so_basis import LieElt

    if a.grade != a.n - 1:
        raise ValueError("hodge_transport expects grade n-1")
    star = hodge_star(a)
    return LieElt(a.n, "E", {k: -c for k, c in star.terms.items()})


def ad_matrix(a: WedgeElt) -> list[list]:
    """Matrix of ad(a) acting on A (column j = image of e_{j+1})."""
    n = a.n
    cols = [ad_vector(a, WedgeElt.basis(n, j)).coords() for j in range(1, n + 2)]
    return [[cols[j][i] for j in range(n + 1)] for i in range(n + 1)]
