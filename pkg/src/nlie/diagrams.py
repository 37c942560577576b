"""Arc diagrams for monomials in U(so(n+1)).

A monomial e^{i1 j1}…e^{ik jk} is drawn on n+1 ordered points with one arc
per factor, in factor order.  Reordering arcs costs a bracket term; two
crossing arcs (i,k),(j,l) with i<j<k<l can be replaced by (i,j)(k,l) +
(i,l)(j,k), which holds modulo the ideal generated by the x_{i,j,k,l}.
Normal form: arcs sorted and pairwise non-crossing.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb

from . import so_basis as sb
from .linalg import Echelon, vec_iadd
from .scalar import I, WeightPoly, simplify
from .uea import UElt, pbw_normalize, qa_generators

Arc = tuple[int, int]


class CrossingClass(Enum):
    DISJOINT = "disjoint"
    NESTED = "nested"
    SHARED = "shared-endpoint"
    CROSSING = "crossing"


def crossing_class(x: Arc, y: Arc) -> CrossingClass:
    (a, b), (c, d) = sorted([tuple(sorted(x)), tuple(sorted(y))])
    if len({a, b, c, d}) < 4:
        return CrossingClass.SHARED
    if b < c:
        return CrossingClass.DISJOINT
    if d < b:
        return CrossingClass.NESTED
    return CrossingClass.CROSSING


def is_crossing(x: Arc, y: Arc) -> bool:
    return crossing_class(x, y) is CrossingClass.CROSSING


@dataclass(frozen=True)
class Diagram:
    points: int
    arcs: tuple[Arc, ...]
    coeff: object = 1


@dataclass(frozen=True)
class DiagramSum:
    points: int
    terms: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        clean: dict = {}
        for arcs, c in self.terms.items():
            sign, canon = 1, []
            for p, q in arcs:
                if not (1 <= p <= self.points and 1 <= q <= self.points):
                    raise ValueError(f"arc {(p, q)} outside 1..{self.points}")
                s, lab = sb.canon(p, q)
                sign *= s
                canon.append(lab)
            if sign and c:
                vec_iadd(clean, {tuple(canon): sign * c})
        object.__setattr__(self, "terms", {k: simplify(v) for k, v in clean.items() if v})

    @property
    def n(self) -> int:
        return self.points - 1

    def diagrams(self) -> list[Diagram]:
        return [Diagram(self.points, arcs, c) for arcs, c in sorted(self.terms.items())]

    def __add__(self, o):
        t = dict(self.terms)
        vec_iadd(t, o.terms)
        return DiagramSum(self.points, t)

    def __neg__(self):
        return DiagramSum(self.points, {k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, DiagramSum):
            out: dict = {}
            for a, ca in self.terms.items():
                for b, cb in o.terms.items():
                    vec_iadd(out, {a + b: ca * cb})
            return DiagramSum(self.points, out)
        return DiagramSum(self.points, {k: v * o for k, v in self.terms.items()})

    def __rmul__(self, s):
        return self * s

    def __eq__(self, o):
        if not isinstance(o, DiagramSum):
            return NotImplemented
        return self.points == o.points and self.terms == o.terms

    def __bool__(self):
        return bool(self.terms)


def arc(points: int, p: int, q: int, coeff=1) -> DiagramSum:
    return DiagramSum(points, {((p, q),): coeff})


def diagram_of(u: UElt) -> DiagramSum:
    if u.family != "E":
        raise ValueError("diagrams are drawn for E-family elements")
    return DiagramSum(u.n + 1, dict(u.terms))


def monomial_of(d: DiagramSum) -> UElt:
    return pbw_normalize(d.points - 1, dict(d.terms))


def is_normal(arcs: tuple[Arc, ...]) -> bool:
    if any(arcs[i] > arcs[i + 1] for i in range(len(arcs) - 1)):
        return False
    return not any(is_crossing(x, y) for x, y in itertools.combinations(arcs, 2))


def _resolve(x: Arc, y: Arc) -> list[tuple[Arc, Arc]]:
    i, j, k, l = sorted(x + y)
    return [((i, j), (k, l)), ((i, l), (j, k))]


class _Normalizer:
    def __init__(self, n: int, rng: random.Random | None):
        self.n = n
        self.rng = rng
        self.memo: dict | None = {} if rng is None else None
        self.steps = 0

    def nf(self, word: tuple) -> dict:
        if self.memo is not None and word in self.memo:
            return self.memo[word]
        self.steps += 1
        crossings = [(p, q) for p, q in itertools.combinations(range(len(word)), 2)
                     if is_crossing(word[p], word[q])]
        descents = [i for i in range(len(word) - 1) if word[i] > word[i + 1]]
        if not crossings and not descents:
            out = {word: 1}
        else:
            if self.rng is None:
                move = ("x",) + crossings[0] if crossings else ("s", descents[0])
            else:
                moves = [("x", p, q) for p, q in crossings] + [("s", i) for i in descents]
                move = self.rng.choice(moves)
            out = self._cross(word, move[1], move[2]) if move[0] == "x" else self._swap(word, move[1])
        if self.memo is not None:
            self.memo[word] = out
        return out

    def _swap(self, word, i):
        x, y = word[i], word[i + 1]
        out = dict(self.nf(word[:i] + (y, x) + word[i + 2:]))
        for lab, c in sb.e_bracket(x, y).items():
            vec_iadd(out, self.nf(word[:i] + (lab,) + word[i + 2:]), c)
        return out

    def _cross(self, word, p, q):
        # bring the arc at q next to the one at p, then resolve the pair
        out: dict = {}
        w = word
        for r in range(q, p + 1, -1):
            x, y = w[r - 1], w[r]
            for lab, c in sb.e_bracket(x, y).items():
                vec_iadd(out, self.nf(w[:r - 1] + (lab,) + w[r + 1:]), c)
            w = w[:r - 1] + (y, x) + w[r + 1:]
        for pair in _resolve(w[p], w[p + 1]):
            vec_iadd(out, self.nf(w[:p] + pair + w[p + 2:]))
        return out


def normalize_diagram(d: DiagramSum, rng: random.Random | None = None) -> DiagramSum:
    """Sorted, non-crossing normal form.  ``rng`` picks rewrites at random."""
    norm = _Normalizer(d.points - 1, rng)
    out: dict = {}
    for arcs, c in d.terms.items():
        vec_iadd(out, norm.nf(arcs), c)
    return DiagramSum(d.points, out)


def confluence_check(d: DiagramSum, strategies: int = 20, seed: int = 0) -> bool:
    ref = normalize_diagram(d)
    return all(normalize_diagram(d, random.Random(seed + s)) == ref for s in range(strategies))


def noncrossing_monomials(n: int, degree: int) -> list[tuple[Arc, ...]]:
    labs = sb.e_labels(n)
    return [w for w in itertools.combinations_with_replacement(labs, degree) if is_normal(w)]


def count_noncrossing(n: int, degree: int = 2) -> int:
    if degree != 2:
        raise ValueError("only degree 2 is supported")
    return len(noncrossing_monomials(n, 2))


def expected_noncrossing(n: int) -> int:
    m = comb(n + 1, 2)
    return m * (m + 1) // 2 - comb(n + 1, 4)


def truncated_ideal(n: int) -> Echelon:
    """span(R) + U_1·R as sparse vectors in the PBW basis (degree ≤ 3)."""
    gens = qa_generators(n)
    ech = Echelon(r.terms for r in gens)
    for lab in sb.e_labels(n):
        u = UElt.from_lie(sb.LieElt.basis(n, "E", *lab))
        for r in gens:
            ech.add((u * r).terms)
    return ech


def route_difference_in_ideal(u: UElt, ideal: Echelon | None = None) -> bool:
    """u − (normal diagram of u) lies in the truncated ideal."""
    if ideal is None:
        ideal = truncated_ideal(u.n)
    diff = u - monomial_of(normalize_diagram(diagram_of(u)))
    return ideal.contains(diff.terms)


# --------------------------------------------------------------------------
# the classification polynomial, read off diagrams
# --------------------------------------------------------------------------

def _block(n: int, j: int, k: int):
    p1, p2, p3, p4 = 2 * j - 1, 2 * j, 2 * k - 1, 2 * k
    e = lambda a, b, c=1: arc(n + 1, a, b, c)  # noqa: E731
    return (p1, p2, p3, p4), e


def leg_shift_relations(n: int, j: int, k: int) -> dict[str, bool]:
    """Right-end leg shifts: e^{13} − i e^{23} and e^{24} + i e^{14} (points of
    the two blocks) are raising, hence kill the highest vector."""
    (p1, p2, p3, p4), _ = _block(n, j, k)
    L = sb.LieElt
    rs = sb.root_system(n)
    raising = set(rs.positive_labels)

    def is_raising(x: sb.LieElt) -> bool:
        v = sb.to_v_basis(x)
        return bool(v) and all(lab in raising for lab in v.terms)

    a = L(n, "E", {(p1, p3): 1, (p2, p3): -I})
    b = L(n, "E", {(p2, p4): 1, (p1, p4): I})
    return {"e13 = i e23": is_raising(a), "e24 = -i e14": is_raising(b)}


def vanishing_root_vectors(n: int, j: int, k: int) -> dict[str, bool]:
    """v_j∧v_k = ½(e13 − e24 − i e23 − i e14), v_j∧v_{−k} = ½(e13 + e24 − i e23 + i e14)."""
    (p1, p2, p3, p4), _ = _block(n, j, k)
    L = sb.LieElt
    h = Fraction(1, 2)
    vjk = L(n, "E", {(p1, p3): h, (p2, p4): -h, (p2, p3): -I * h, (p1, p4): -I * h})
    vjmk = L(n, "E", {(p1, p3): h, (p2, p4): h, (p2, p3): -I * h, (p1, p4): I * h})
    return {
        "v_j^v_k": sb.to_v_basis(vjk) == L(n, "V", {(j, k): 1}),
        "v_j^v_-k": sb.to_v_basis(vjmk) == L(n, "V", {(-k, j): -1}),
    }


def cartan_arc_value(n: int, a: int, b: int) -> WeightPoly:
    """Arc (2j−1, 2j) is e^{2j−1,2j} = −i ε_j and acts on 𝟙 by −i λ_j."""
    N = sb.rank_of(n)
    if b != a + 1 or a % 2 == 0 or b > 2 * N:
        raise ValueError(f"arc {(a, b)} is not a Cartan arc")
    return WeightPoly.var(b // 2 - 1, N) * (-I)


def evaluate_cartan_diagram(d: DiagramSum) -> WeightPoly:
    """Evaluate a sum of all-Cartan diagrams on the highest vector."""
    n = d.points - 1
    N = sb.rank_of(n)
    total = WeightPoly.zero(N)
    for arcs, c in d.terms.items():
        t = WeightPoly.const(N, c)
        for a, b in arcs:
            t = t * cartan_arc_value(n, a, b)
        total = total + t
    return total


def graphical_classification_polynomial(j: int, k: int, n: int) -> WeightPoly:
    """P1 = (e13 + i e23)(e24 + i e14) and P2 = (e24 − i e14)(e13 − i e23)
    both kill 𝟙 because their right factors are raising.  Normalizing P1+P2
    as diagrams leaves only Cartan arcs, whose value is the polynomial."""
    N = sb.rank_of(n)
    if not 1 <= j < k <= N:
        raise ValueError(f"need 1 <= j < k <= {N}")
    (p1, p2, p3, p4), e = _block(n, j, k)
    shifts = leg_shift_relations(n, j, k)
    if not all(shifts.values()):
        raise ArithmeticError(f"leg-shift relation failed: {shifts}")
    P1 = (e(p1, p3) + e(p2, p3, I)) * (e(p2, p4) + e(p1, p4, I))
    P2 = (e(p2, p4) + e(p1, p4, -I)) * (e(p1, p3) + e(p2, p3, -I))
    nf = normalize_diagram(P1 + P2)
    for arcs in nf.terms:
        if not all(b == a + 1 and a % 2 == 1 for a, b in arcs):
            raise ArithmeticError(f"non-Cartan diagram survived: {arcs}")
    return evaluate_cartan_diagram(nf)


def graphical_normal_form(j: int, k: int, n: int) -> DiagramSum:
    (p1, p2, p3, p4), e = _block(n, j, k)
    P1 = (e(p1, p3) + e(p2, p3, I)) * (e(p2, p4) + e(p1, p4, I))
    P2 = (e(p2, p4) + e(p1, p4, -I)) * (e(p1, p3) + e(p2, p3, -I))
    return normalize_diagram(P1 + P2)


# --------------------------------------------------------------------------
# text rendering
# --------------------------------------------------------------------------

def render_text(d) -> str:
    """One line of point labels, then one line per arc per diagram."""
    if isinstance(d, Diagram):
        d = DiagramSum(d.points, {d.arcs: d.coeff})
    w = max(len(str(d.points)), 1) + 1
    head = "".join(str(p).ljust(w) for p in range(1, d.points + 1)).rstrip()
    blocks = []
    for arcs, c in sorted(d.terms.items()):
        lines = [f"coeff {c}", head]
        for a, b in arcs:
            row = [" "] * (w * d.points)
            row[(a - 1) * w] = "["
            row[(b - 1) * w] = "]"
            for x in range((a - 1) * w + 1, (b - 1) * w):
                row[x] = "-"
            lines.append("".join(row).rstrip())
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) if blocks else head + "\n(empty)"
