"""Hot loops: packed GF(2) elimination and batched rank modulo a prime.

Each kernel has a numba implementation and a pure-numpy one.  The numba path
is used when numba imports and ``CIRCUITRANK_PURE_NUMPY`` is unset or "0";
both paths stay importable under explicit names for tests and benchmarks.
"""

from __future__ import annotations

import os

import numpy as np

# Largest prime below 2**31: products of two residues fit in int64.
MODP = 2147483647

_ONE = np.uint64(1)

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("CIRCUITRANK_PURE_NUMPY", "0") in ("", "0")


# ---------------------------------------------------------------- numpy path


def f2_eliminate_numpy(data: np.ndarray, ncols: int, full: bool) -> np.ndarray:
    """In-place elimination of packed rows; returns pivot columns.

    With ``full`` the result is reduced row-echelon form, otherwise only the
    rows below each pivot are cleared (enough for rank).
    """
    nrows = data.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        w = c >> 6
        b = np.uint64(c & 63)
        bits = (data[:, w] >> b) & _ONE
        below = np.flatnonzero(bits[r:])
        if below.size == 0:
            continue
        piv = r + int(below[0])
        if piv != r:
            data[[r, piv]] = data[[piv, r]]
            bits[[r, piv]] = bits[[piv, r]]
        bits[r] = 0
        if not full:
            bits[:r] = 0
        targets = np.flatnonzero(bits)
        if targets.size:
            data[targets, w:] ^= data[r, w:]
        pivots.append(c)
        r += 1
    return np.array(pivots, dtype=np.int64)


def modp_nullities_numpy(mat: np.ndarray, scales: np.ndarray, shifts: np.ndarray, p: int = MODP) -> np.ndarray:
    """Nullity mod ``p`` of ``scales[k] * mat - shifts[k] * I`` for each k.

    ``mat`` must be square with entries already reduced into [0, p).  The
    batch is eliminated together, one column at a time.
    """
    n = mat.shape[0]
    k = scales.shape[0]
    if n == 0 or k == 0:
        return np.zeros(k, dtype=np.int64)
    x = (mat[None, :, :] * (scales[:, None, None] % p)) % p
    idx = np.arange(n)
    x[:, idx, idx] = (x[:, idx, idx] - shifts[:, None] % p) % p
    rank = np.zeros(k, dtype=np.int64)
    batch = np.arange(k)
    for c in range(n):
        live = (x[:, :, c] != 0) & (idx[None, :] >= rank[:, None])
        has = live.any(axis=1)
        if not has.any():
            continue
        bsel = batch[has]
        piv = live[has].argmax(axis=1)
        r = rank[has]
        rows_p = x[bsel, piv].copy()
        x[bsel, piv] = x[bsel, r]
        x[bsel, r] = rows_p
        pv = rows_p[:, c]
        below = idx[None, :] > r[:, None]
        xb = x[bsel]
        f = np.where(below, xb[:, :, c], 0)
        upd = (xb * pv[:, None, None] - f[:, :, None] * rows_p[:, None, :]) % p
        x[bsel] = np.where(below[:, :, None], upd, xb)
        rank[has] += 1
    return n - rank


def modp_rank_numpy(mat: np.ndarray, p: int = MODP) -> int:
    x = mat.copy() % p
    nrows, ncols = x.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(x[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            x[[r, piv]] = x[[piv, r]]
        f = x[r + 1:, c].copy()
        x[r + 1:] = (x[r + 1:] * x[r, c] - f[:, None] * x[r]) % p
        r += 1
    return r


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def f2_eliminate_numba(data, ncols, full):
        nrows, nwords = data.shape
        pivots = np.empty(min(nrows, ncols), dtype=np.int64)
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            w = c >> 6
            bit = np.uint64(1) << np.uint64(c & 63)
            piv = -1
            for i in range(r, nrows):
                if data[i, w] & bit:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for k in range(w, nwords):
                    tmp = data[r, k]
                    data[r, k] = data[piv, k]
                    data[piv, k] = tmp
            start = 0 if full else r + 1
            for i in range(start, nrows):
                if i != r and data[i, w] & bit:
                    for k in range(w, nwords):
                        data[i, k] ^= data[r, k]
            pivots[r] = c
            r += 1
        return pivots[:r].copy()

    @njit(cache=True)
    def _modp_rank_inplace(x, p):
        nrows, ncols = x.shape
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if x[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, ncols):
                    tmp = x[r, j]
                    x[r, j] = x[piv, j]
                    x[piv, j] = tmp
            pv = x[r, c]
            for i in range(r + 1, nrows):
                f = x[i, c]
                if f != 0:
                    for j in range(c, ncols):
                        x[i, j] = (x[i, j] * pv - f * x[r, j]) % p
            r += 1
        return r

    @njit(cache=True)
    def modp_rank_numba(mat, p):
        x = mat.copy()
        for i in range(x.shape[0]):
            for j in range(x.shape[1]):
                x[i, j] = x[i, j] % p
        return _modp_rank_inplace(x, p)

    @njit(cache=True)
    def modp_nullities_numba(mat, scales, shifts, p):
        n = mat.shape[0]
        k = scales.shape[0]
        out = np.empty(k, dtype=np.int64)
        x = np.empty((n, n), dtype=np.int64)
        for t in range(k):
            s = scales[t] % p
            sh = shifts[t] % p
            for i in range(n):
                for j in range(n):
                    x[i, j] = mat[i, j] * s % p
                x[i, i] = (x[i, i] - sh) % p
            out[t] = n - _modp_rank_inplace(x, p)
        return out


if USE_NUMBA:
    f2_eliminate = f2_eliminate_numba
    modp_nullities = modp_nullities_numba
    modp_rank = modp_rank_numba
else:
    f2_eliminate = f2_eliminate_numpy
    modp_nullities = modp_nullities_numpy
    modp_rank = modp_rank_numpy
