"""Dense linear algebra over GF(2).

Matrices are stored row-major with each row packed into little-endian
``uint64`` words (column ``j`` is bit ``j % 64`` of word ``j // 64``).
Subspaces and edge sets are plain Python ints used as bit vectors, bit ``j``
being coordinate ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels


class DimensionError(ValueError):
    pass


@dataclass
class BinaryMatrix:
    rows: int
    cols: int
    data: np.ndarray  # (rows, ceil(cols / 64)) uint64

    @property
    def nwords(self) -> int:
        return self.data.shape[1]

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls(rows, cols, np.zeros((rows, (cols + 63) // 64), dtype=np.uint64))

    @classmethod
    def from_dense(cls, a) -> "BinaryMatrix":
        a = np.asarray(a)
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        rows, cols = a.shape
        nwords = (cols + 63) // 64
        if rows == 0 or nwords == 0:
            return cls.zeros(rows, cols)
        bits = (a % 2).astype(np.uint8)
        padded = np.zeros((rows, nwords * 64), dtype=np.uint8)
        padded[:, :cols] = bits
        packed = np.packbits(padded, axis=1, bitorder="little")
        data = packed.view("<u8").astype(np.uint64).reshape(rows, nwords)
        return cls(rows, cols, np.ascontiguousarray(data))

    @classmethod
    def from_row_ints(cls, row_bits: Sequence[int], cols: int) -> "BinaryMatrix":
        m = cls.zeros(len(row_bits), cols)
        if cols <= 64:
            if row_bits:
                m.data[:, 0] = np.array(row_bits, dtype=np.uint64)
            return m
        nbytes = m.nwords * 8
        for i, r in enumerate(row_bits):
            m.data[i] = np.frombuffer(r.to_bytes(nbytes, "little"), dtype="<u8")
        return m

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls.from_row_ints([1 << i for i in range(n)], n)

    def row_int(self, i: int) -> int:
        return int.from_bytes(self.data[i].astype("<u8").tobytes(), "little")

    def row_ints(self) -> list[int]:
        return [self.row_int(i) for i in range(self.rows)]

    def to_dense(self) -> np.ndarray:
        if self.rows == 0:
            return np.zeros((0, self.cols), dtype=np.uint8)
        raw = self.data.astype("<u8").view(np.uint8).reshape(self.rows, -1)
        return np.unpackbits(raw, axis=1, bitorder="little")[:, : self.cols]

    def copy(self) -> "BinaryMatrix":
        return BinaryMatrix(self.rows, self.cols, self.data.copy())

    def __add__(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch")
        return BinaryMatrix(self.rows, self.cols, self.data ^ other.data)

    def plus_identity(self) -> "BinaryMatrix":
        if self.rows != self.cols:
            raise DimensionError("identity shift needs a square matrix")
        out = self.copy()
        for i in range(self.rows):
            out.data[i, i >> 6] ^= np.uint64(1) << np.uint64(i & 63)
        return out


@dataclass(frozen=True)
class F2Subspace:
    """Subspace of GF(2)^ambient_dim held as a reduced row-echelon basis.

    Each basis vector's pivot is its lowest set bit; pivots increase along
    ``basis`` and no other basis vector has that bit set.
    """

    ambient_dim: int
    basis: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[int]) -> "F2Subspace":
        piv: dict[int, int] = {}
        for v in vectors:
            if v >> ambient_dim:
                raise DimensionError("vector exceeds ambient dimension")
            for p, b in piv.items():
                if v >> p & 1:
                    v ^= b
            if not v:
                continue
            p = (v & -v).bit_length() - 1
            for q, b in piv.items():
                if b >> p & 1:
                    piv[q] = b ^ v
            piv[p] = v
        return cls(ambient_dim, tuple(piv[p] for p in sorted(piv)))

    def contains(self, v: int) -> bool:
        for b in self.basis:
            p = (b & -b).bit_length() - 1
            if v >> p & 1:
                v ^= b
        return v == 0

    def members(self) -> list[int]:
        """All 2**dim elements; only sensible for small dimensions."""
        out = [0]
        for b in self.basis:
            out += [x ^ b for x in out]
        return out


def f2_rank(m: BinaryMatrix) -> int:
    work = m.data.copy()
    return len(_kernels.f2_eliminate(work, m.cols, False))


def f2_rank_nullity(m: BinaryMatrix) -> tuple[int, int]:
    r = f2_rank(m)
    return r, m.cols - r


def f2_nullity(m: BinaryMatrix) -> int:
    return m.cols - f2_rank(m)


def f2_rref(m: BinaryMatrix) -> tuple[BinaryMatrix, list[int]]:
    work = m.data.copy()
    pivots = _kernels.f2_eliminate(work, m.cols, True)
    return BinaryMatrix(m.rows, m.cols, work), [int(c) for c in pivots]


def f2_kernel_basis(m: BinaryMatrix) -> F2Subspace:
    """Basis of ``{x : m x = 0}``, one vector per free column."""
    red, pivots = f2_rref(m)
    rows = [red.row_int(i) for i in range(len(pivots))]
    pivset = set(pivots)
    vecs = []
    for f in range(m.cols):
        if f in pivset:
            continue
        x = 1 << f
        for r, pc in enumerate(pivots):
            if rows[r] >> f & 1:
                x |= 1 << pc
        vecs.append(x)
    return F2Subspace.from_vectors(m.cols, vecs)


def _columns_matrix(vectors: Sequence[int], nrows: int) -> BinaryMatrix:
    """Matrix whose j-th column is ``vectors[j]``."""
    dense = np.zeros((nrows, len(vectors)), dtype=np.uint8)
    nbytes = max(1, (nrows + 7) // 8)
    for j, v in enumerate(vectors):
        raw = np.frombuffer(v.to_bytes(nbytes, "little"), dtype=np.uint8)
        dense[:, j] = np.unpackbits(raw, bitorder="little")[:nrows]
    return BinaryMatrix.from_dense(dense)


def f2_intersect(a: F2Subspace, b: F2Subspace) -> F2Subspace:
    """Intersection via the kernel of the stacked generator matrix [a | b]."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    if not a.basis or not b.basis:
        return F2Subspace(a.ambient_dim, ())
    gens = list(a.basis) + list(b.basis)
    ker = f2_kernel_basis(_columns_matrix(gens, a.ambient_dim))
    k = len(a.basis)
    out = []
    for z in ker.basis:
        x = 0
        for j in range(k):
            if z >> j & 1:
                x ^= a.basis[j]
        out.append(x)
    return F2Subspace.from_vectors(a.ambient_dim, out)


def f2_sum(a: F2Subspace, b: F2Subspace) -> F2Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    return F2Subspace.from_vectors(a.ambient_dim, a.basis + b.basis)


def f2_dot_parity(x, y) -> int:
    """|x ∩ y| mod 2 for edge sets given as ints or ``EdgeSubset``s."""
    x = getattr(x, "bits", x)
    y = getattr(y, "bits", y)
    return (x & y).bit_count() & 1
