"""Exact ranks, nullities and eigenvalue multiplicities of integer graph matrices.

Nothing here touches floating point.  Ranks over Q come from fraction-free
(Bareiss) elimination on Python integers.  Multiplicity sweeps first screen
candidates by rank modulo a large prime: the nullity mod p is never smaller
than the rational nullity, so a zero there is already exact, and only the
remaining candidates go through Bareiss.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from . import _kernels
from .f2 import BinaryMatrix
from .graph import Graph

IntMatrix = list[list[int]]
RationalLike = Union[Fraction, int, str]

KINDS = ("A", "L", "Q")


class DomainError(ValueError):
    pass


def as_rational(x: RationalLike) -> Fraction:
    """Parse ``"p/q"`` (``q`` optional) or pass through ints and Fractions."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    text = str(x).strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def _check_alpha(alpha: Fraction) -> None:
    if not 0 <= alpha <= 1:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")


def build_matrix(g: Graph, kind: str, alpha: RationalLike | None = None) -> IntMatrix:
    """A, L = D - A, Q = D + A, or ``A_alpha`` scaled by the denominator of alpha.

    For ``alpha = a/b`` the returned matrix is ``a D + (b - a) A``.
    """
    n = g.n
    if kind == "A_alpha":
        if alpha is None:
            raise ValueError("A_alpha needs alpha")
        al = as_rational(alpha)
        _check_alpha(al)
        dcoef, acoef = al.numerator, al.denominator - al.numerator
    elif kind == "A":
        dcoef, acoef = 0, 1
    elif kind == "L":
        dcoef, acoef = 1, -1
    elif kind == "Q":
        dcoef, acoef = 1, 1
    else:
        raise ValueError(f"unknown matrix kind {kind!r}")
    m = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        m[u][v] = m[v][u] = acoef
    for x, d in enumerate(g.degrees):
        m[x][x] = dcoef * d
    return m


def shifted(m: IntMatrix, scale: int, shift: int) -> IntMatrix:
    """``scale * m - shift * I``."""
    out = [[scale * x for x in row] for row in m]
    for i in range(min(len(out), len(out[0]) if out else 0)):
        out[i][i] -= shift
    return out


def bareiss_rank(m: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination.

    Pivot is the first nonzero entry in column order.  Every intermediate
    entry is a minor of the input, so the division by the previous pivot
    is exact.
    """
    rows = [list(r) for r in m]
    nrows = len(rows)
    if nrows == 0:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = r
        while piv < nrows and rows[piv][c] == 0:
            piv += 1
        if piv == nrows:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r][c + 1:]
        pv = rows[r][c]
        for i in range(r + 1, nrows):
            tail = rows[i][c + 1:]
            f = rows[i][c]
            if f:
                new = [(pv * x - f * y) // prev for x, y in zip(tail, prow)]
            elif prev == pv:
                new = tail
            else:
                new = [pv * x // prev for x in tail]
            rows[i] = [0] * (c + 1) + new
        prev = pv
        r += 1
    return r


def rank_over_Q(m: Sequence[Sequence[int]]) -> int:
    return bareiss_rank(m)


def nullity_over_Q(m: Sequence[Sequence[int]]) -> int:
    ncols = len(m[0]) if m else 0
    return ncols - bareiss_rank(m)


def rank_mod_p(m: Sequence[Sequence[int]], p: int = _kernels.MODP) -> int:
    if not m or not m[0]:
        return 0
    if p >= 1 << 31:
        raise ValueError("prime must be below 2**31 for int64 elimination")
    arr = np.array([[x % p for x in row] for row in m], dtype=np.int64)
    return int(_kernels.modp_rank(arr, p))


def mod2_reduce(m: Sequence[Sequence[int]]) -> BinaryMatrix:
    """Entrywise residue in {0, 1}."""
    ncols = len(m[0]) if m else 0
    return BinaryMatrix.from_row_ints([sum(1 << j for j, x in enumerate(row) if x & 1) for row in m], ncols)


def _to_modp(m: IntMatrix, p: int) -> np.ndarray:
    n = len(m)
    return np.array([[x % p for x in row] for row in m], dtype=np.int64).reshape(n, n)


def shifted_nullities(m: IntMatrix, pairs: Sequence[tuple[int, int]]) -> list[int]:
    """Exact nullity over Q of ``s * m - t * I`` for each ``(s, t)`` in ``pairs``."""
    n = len(m)
    if not pairs:
        return []
    if n == 0:
        return [0] * len(pairs)
    p = _kernels.MODP
    scales = np.array([s % p for s, _ in pairs], dtype=np.int64)
    shifts = np.array([t % p for _, t in pairs], dtype=np.int64)
    screen = _kernels.modp_nullities(_to_modp(m, p), scales, shifts, p)
    out = []
    for (s, t), z in zip(pairs, screen):
        out.append(0 if z == 0 else nullity_over_Q(shifted(m, s, t)))
    return out


def multiplicities(g: Graph, kind: str, lams: Iterable[RationalLike]) -> list[int]:
    """Multiplicity of each rational ``lam`` as an eigenvalue of A, L or Q."""
    m = build_matrix(g, kind)
    pairs = []
    for lam in lams:
        lam = as_rational(lam)
        pairs.append((lam.denominator, lam.numerator))
    return shifted_nullities(m, pairs)


def multiplicity(g: Graph, kind: str, lam: RationalLike) -> int:
    """Nullity over Q of ``den(lam) M - num(lam) I``."""
    return multiplicities(g, kind, [lam])[0]


def multiplicities_alpha(g: Graph, alpha: RationalLike, lams: Iterable[RationalLike]) -> list[int]:
    """Multiplicities of ``p/q`` in ``A_{a/b}`` via ``q a D + q (b - a) A - b p I``."""
    alpha = as_rational(alpha)
    _check_alpha(alpha)
    m = build_matrix(g, "A_alpha", alpha)
    b = alpha.denominator
    pairs = []
    for lam in lams:
        lam = as_rational(lam)
        pairs.append((lam.denominator, b * lam.numerator))
    return shifted_nullities(m, pairs)


def multiplicity_alpha(g: Graph, alpha: RationalLike, lam: RationalLike) -> int:
    return multiplicities_alpha(g, alpha, [lam])[0]


def integer_eigenvalue_candidates(g: Graph, kind: str) -> list[int]:
    """Integers within the Gershgorin radius: max degree for A, twice it for L and Q."""
    if kind not in KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}")
    delta = max(g.degrees, default=0)
    radius = delta if kind == "A" else 2 * delta
    return list(range(-radius, radius + 1))


def alpha_eigenvalue_candidates(g: Graph, alpha: RationalLike) -> list[Fraction]:
    """Rationals ``k/b`` and ``k/2`` in ``[-max degree, max degree]``.

    Every rational eigenvalue of ``A_{a/b}`` has the form ``k/b``, because
    ``b A_{a/b}`` is an integer matrix; the halves are added so the
    even-denominator rows of the parity table are exercised too.
    """
    alpha = as_rational(alpha)
    _check_alpha(alpha)
    return list(_halves_and_bths(alpha.denominator, max(g.degrees, default=0)))


@lru_cache(maxsize=None)
def _halves_and_bths(b: int, delta: int) -> tuple[Fraction, ...]:
    out = set()
    for den in {b, 2}:
        for k in range(-delta * den, delta * den + 1):
            out.add(Fraction(k, den))
    return tuple(sorted(out))
