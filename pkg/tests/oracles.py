"""Independent oracles.  Nothing here imports from nlie.

Matrices are plain nested lists over Fraction.  The Casimir spectrum of
S²(so(m)) is predicted from representation theory alone: the constituents
are the trivial module, V(2ε1), ∧⁴ ≅ ∧^{m−4} and V(2ε1+2ε2), and the
table operator acts on V(μ) by ⟨μ, μ+2ρ⟩/4 − (m−2).
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb


def unit(m: int, a: int, b: int) -> list[list[Fraction]]:
    """e^{ab} = E_ab − E_ba as an m×m matrix (1-based a, b)."""
    M = [[Fraction(0)] * m for _ in range(m)]
    M[a - 1][b - 1] += 1
    M[b - 1][a - 1] -= 1
    return M


def matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def bracket(A, B):
    P, Q = matmul(A, B), matmul(B, A)
    return [[p - q for p, q in zip(r, s)] for r, s in zip(P, Q)]


def det(M) -> Fraction:
    M = [list(map(Fraction, r)) for r in M]
    n, sign, d = len(M), 1, Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        d *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            for k in range(c, n):
                M[r][k] -= f * M[c][k]
    return sign * d


def cross(vectors: list[list]) -> list[Fraction]:
    """Generalized vector product: the vector w with ⟨w, x⟩ = det(v1, …, vn, x)."""
    m = len(vectors) + 1
    out = []
    for i in range(m):
        x = [Fraction(int(i == k)) for k in range(m)]
        out.append(det([list(r) for r in zip(*vectors, x)]))
    return out


# -- roots of so(m) ---------------------------------------------------------

def positive_roots(m: int) -> list[tuple]:
    N = m // 2
    out = []
    for i, j in itertools.combinations(range(N), 2):
        for s in (1, -1):
            v = [0] * N
            v[i], v[j] = 1, s
            out.append(tuple(v))
    if m % 2:
        for i in range(N):
            v = [0] * N
            v[i] = 1
            out.append(tuple(v))
    return out


def rho(m: int) -> tuple:
    N = m // 2
    return tuple(Fraction(m, 2) - i - 1 for i in range(N))


def weyl_dim(m: int, mu) -> int:
    r = rho(m)
    num = den = Fraction(1)
    for a in positive_roots(m):
        num *= sum((Fraction(x) + y) * z for x, y, z in zip(mu, r, a))
        den *= sum(y * z for y, z in zip(r, a))
    assert (num / den).denominator == 1
    return int(num / den)


def casimir_value(m: int, mu) -> Fraction:
    r = rho(m)
    q = sum(Fraction(x) * (x + 2 * y) for x, y in zip(mu, r))
    return q / 4 - (m - 2)


def s2_constituents(m: int) -> list[tuple]:
    N = m // 2
    pad = lambda *xs: tuple(list(xs) + [0] * (N - len(xs)))  # noqa: E731
    k = min(4, m - 4)
    wedge = tuple([1] * k + [0] * (N - k))
    out = [pad(), pad(2), pad(2, 2)]
    if m % 2 == 0 and k == N:
        # ∧^{m/2} splits into the self-dual and anti-self-dual parts
        anti = list(wedge)
        anti[-1] = -1
        out += [wedge, tuple(anti)]
    else:
        out.append(wedge)
    if m == 4:
        out.append((2, -2))
    return out


def predicted_spectrum(n: int) -> dict[Fraction, int]:
    m = n + 1
    spect: dict = {}
    for mu in s2_constituents(m):
        th = casimir_value(m, mu)
        spect[th] = spect.get(th, 0) + weyl_dim(m, mu)
    return spect


def dim_s2(n: int) -> int:
    M = comb(n + 1, 2)
    return M * (M + 1) // 2


def crossing_pairs_count(m: int) -> int:
    """Unordered pairs of chords on m points that cross."""
    return comb(m, 4)
