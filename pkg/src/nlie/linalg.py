"""Exact linear algebra over Q(i,√2).

Two flavours live here.  :class:`ExactMatrix` with :func:`solve_linear` is a
plain dense row-reduction, first-nonzero pivoting.  The sparse helpers
(:class:`Echelon`, :func:`kernel_of_map`, ...) work on vectors stored as
``{key: coefficient}`` dicts; the symmetric-square computations need them
because the operators there are block diagonal and almost every entry is 0.

Entries may be ``int``, ``Fraction`` or :class:`~nlie.scalar.Scalar`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

from .scalar import simplify

Vec = dict  # key -> coefficient, no zero entries


class DimensionError(ValueError):
    pass


def _div(x, y):
    if isinstance(x, int) and isinstance(y, int):
        return Fraction(x, y)
    return x / y


@dataclass
class ExactMatrix:
    rows: list[list]
    nrows: int = field(default=-1)
    ncols: int = field(default=-1)

    def __post_init__(self):
        if self.nrows < 0:
            self.nrows = len(self.rows)
        if self.ncols < 0:
            self.ncols = len(self.rows[0]) if self.rows else 0
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise DimensionError("matrix is not rectangular")

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> "ExactMatrix":
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls([[c[i] for c in cols] for i in range(nrows)], nrows, len(cols))

    def __matmul__(self, v: Sequence):
        if len(v) != self.ncols:
            raise DimensionError("vector length does not match column count")
        out = []
        for r in self.rows:
            s = 0
            for x, y in zip(r, v):
                if x and y:
                    s = s + x * y
            out.append(simplify(s))
        return out


def row_reduce(m: ExactMatrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        piv = next((i for i in range(r, m.nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [simplify(_div(x, p)) if x else 0 for x in a[r]]
        for i in range(m.nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [simplify(x - f * y) if y else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return a, pivots


def solve_linear(m: ExactMatrix, mode: str, target: Sequence | None = None):
    """Exact rank, kernel basis or span-membership decision.

    ``mode`` is ``"rank"``, ``"kernel_basis"`` or ``"membership"``.  For
    membership, ``target`` has one entry per column and the question is
    whether it lies in the span of the rows.
    """
    if mode == "rank":
        return len(row_reduce(m)[1])
    if mode == "kernel_basis":
        rref, pivots = row_reduce(m)
        free = [c for c in range(m.ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [0] * m.ncols
            v[f] = 1
            for row, pc in zip(rref, pivots):
                if row[f]:
                    v[pc] = simplify(-row[f])
            basis.append(v)
        return basis
    if mode == "membership":
        if target is None or len(target) != m.ncols:
            raise DimensionError("membership target length must equal column count")
        base = len(row_reduce(m)[1])
        ext = ExactMatrix(m.rows + [list(target)], m.nrows + 1, m.ncols)
        return len(row_reduce(ext)[1]) == base
    raise ValueError(f"unknown mode {mode!r}")


# --------------------------------------------------------------------------
# sparse vectors
# --------------------------------------------------------------------------

def vec_add(u: Vec, v: Vec, scale=1) -> Vec:
    out = dict(u)
    for k, c in v.items():
        x = out.get(k, 0) + scale * c
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    return out


def vec_iadd(u: Vec, v: Vec, scale=1) -> None:
    for k, c in v.items():
        x = u.get(k, 0) + scale * c
        if x:
            u[k] = x
        else:
            u.pop(k, None)


def vec_scale(u: Vec, s) -> Vec:
    if not s:
        return {}
    return {k: c * s for k, c in u.items()}


def vec_clean(u: Vec) -> Vec:
    return {k: simplify(c) for k, c in u.items() if c}


class Echelon:
    """Incrementally maintained reduced echelon basis of a span of sparse vectors.

    Every stored vector has a pivot key with coefficient 1 and no stored
    vector mentions another's pivot, so reducing a vector is one pass over
    its keys.
    """

    def __init__(self, vectors: Iterable[Vec] = ()):
        self.rows: dict[Hashable, Vec] = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vec) -> Vec:
        out = dict(v)
        for k in [k for k in v if k in self.rows]:
            c = out.get(k)
            if c:
                vec_iadd(out, self.rows[k], -c)
        return out

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def add(self, v: Vec) -> bool:
        """Insert ``v``; returns False if it was already in the span."""
        r = self.reduce(v)
        if not r:
            return False
        pivot = min(r, key=_sort_key)
        p = r[pivot]
        r = {k: _div(c, p) for k, c in r.items()}
        for key, row in self.rows.items():
            c = row.get(pivot)
            if c:
                vec_iadd(row, r, -c)
        self.rows[pivot] = r
        return True

    def basis(self) -> list[Vec]:
        return [vec_clean(r) for r in self.rows.values()]


def _sort_key(k):
    return (str(type(k)), k) if not isinstance(k, tuple) else (0, k)


def span_rank(vectors: Iterable[Vec]) -> int:
    return Echelon(vectors).rank


def in_span(vectors: Iterable[Vec], target: Vec) -> bool:
    return Echelon(vectors).contains(target)


def kernel_of_map(domain: Sequence[Hashable], apply: Callable[[Hashable], Vec]) -> list[Vec]:
    """Kernel of the linear map sending basis key ``domain[j]`` to ``apply(domain[j])``.

    Column reduction with bookkeeping: each image is reduced against the
    images already seen while tracking which combination of domain keys
    produced it.  A combination whose image reduces to 0 is a kernel vector.
    """
    # a stored row never mentions an earlier row's pivot, so clearing pivots
    # in insertion order only ever introduces later ones
    pivots: dict[Hashable, tuple[Vec, Vec]] = {}
    order: dict[Hashable, int] = {}
    kernel: list[Vec] = []
    for key in domain:
        img = dict(apply(key))
        combo: Vec = {key: 1}
        while img:
            hits = [k for k in img if k in pivots]
            if not hits:
                break
            hit = min(hits, key=order.__getitem__)
            c = img[hit]
            pimg, pcombo = pivots[hit]
            vec_iadd(img, pimg, -c)
            vec_iadd(combo, pcombo, -c)
        if not img:
            kernel.append(vec_clean(combo))
            continue
        pivot = min(img, key=_sort_key)
        p = img[pivot]
        order[pivot] = len(order)
        pivots[pivot] = ({k: _div(v, p) for k, v in img.items()},
                         {k: _div(v, p) for k, v in combo.items()})
    return kernel


def intersection_dim(a: Sequence[Vec], b: Sequence[Vec]) -> int:
    """dim(span a ∩ span b) via dim a + dim b - dim(a + b)."""
    ra, rb = span_rank(a), span_rank(b)
    return ra + rb - span_rank(list(a) + list(b))
