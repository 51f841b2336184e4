"""
Vectorized kernels for Bernstein-Lusztig products.

An element sum c t^e T_v Z^lambda is held as int64 rows
[lambda..., e, v] with int64 coefficients, v indexing a Weyl element in a
``WeylIndex``. Kernels raise ``Overflow`` whenever an int64 bound cannot be
guaranteed, so callers can fall back to exact dict arithmetic.
"""

from __future__ import annotations

from typing import Mapping

import numpy as np

from .laurent import LaurentT

_LIMIT = 1 << 62
_FLOAT_EXACT = 1 << 53
_DENSE_MAX = 1 << 24  # slots in one dense accumulator
_CHUNK = 1 << 22  # term pairs per vectorized block


class Overflow(Exception):
    """An int64 bound could not be guaranteed."""


class WeylIndex:
    """Integer labels for Weyl elements, with right-multiplication tables."""

    def __init__(self, W):
        self.W = W
        self.elts: list = []
        self.index: dict = {}
        self._rmul: dict[int, list[int]] = {}
        self._len: list[int] = []

    def idx(self, w) -> int:
        k = self.index.get(w)
        if k is None:
            k = self.index[w] = len(self.elts)
            self.elts.append(w)
            self._len.append(w.length)
        return k

    def rmul_table(self, i: int) -> np.ndarray:
        tab = self._rmul.setdefault(i, [])
        upto = len(self.elts)
        while len(tab) < upto:
            tab.append(self.idx(self.W.rmul(self.elts[len(tab)], i)))
        return np.array(tab, dtype=np.int64)

    def lengths(self) -> np.ndarray:
        return np.array(self._len, dtype=np.int64)


def _check_sum(C: np.ndarray, factor: float = 1.0) -> None:
    if float(np.abs(C).astype(np.float64).sum()) * factor >= _LIMIT / 4:
        raise Overflow


def to_rows(raw: Mapping, widx: WeylIndex) -> tuple[np.ndarray, np.ndarray]:
    rows = [(*lam, e, widx.idx(v), k)
            for lam, h in raw.items() for v, c in h.items() for e, k in c.terms.items()]
    try:
        arr = np.array(rows, dtype=np.int64)
    except OverflowError:
        raise Overflow from None
    return arr[:, :-1], arr[:, -1]


def scalar_rows(raw: Mapping) -> tuple[np.ndarray, np.ndarray]:
    """Rows [mu..., e] of a map {mu: LaurentT}."""
    rows = [(*mu, e, k) for mu, c in raw.items() for e, k in c.terms.items()]
    try:
        arr = np.array(rows, dtype=np.int64)
    except OverflowError:
        raise Overflow from None
    return arr[:, :-1], arr[:, -1]


def from_rows(K: np.ndarray, C: np.ndarray, widx: WeylIndex, N: int) -> dict:
    out: dict = {}
    elts = widx.elts
    for row, c in zip(K.tolist(), C.tolist()):
        h = out.setdefault(tuple(row[:-2]), {})
        h.setdefault(elts[row[-1]], {})[row[-2]] = c
    return {lam: {v: LaurentT._raw(t, N) for v, t in h.items()} for lam, h in out.items()}


def _pack(K: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    lo = K.min(axis=0)
    span = K.max(axis=0) - lo + 1
    strides = np.ones(K.shape[1], dtype=np.int64)
    size = 1
    for d in reversed(range(K.shape[1])):
        strides[d] = size
        size *= int(span[d])
    if size >= _LIMIT:
        raise Overflow
    return (K - lo) @ strides, lo, strides


def reduce_rows(K: np.ndarray, C: np.ndarray, keep_zeros: bool = False
                ) -> tuple[np.ndarray, np.ndarray]:
    """Merge equal rows in sorted order and drop zero coefficients."""
    if not len(C):
        return K, C
    keys = _pack(K)[0]
    order = np.argsort(keys, kind="stable")
    keys, K, C = keys[order], K[order], C[order]
    starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
    C = np.add.reduceat(C, starts)
    K = K[starts]
    if keep_zeros:
        return K, C
    nz = C != 0
    return K[nz], C[nz]


def right_gen_rows(K: np.ndarray, C: np.ndarray, i: int, root: np.ndarray, cor: np.ndarray,
                   N: int, widx: WeylIndex) -> tuple[np.ndarray, np.ndarray]:
    """
    Rows of a T_i, from Z^lambda T_i = T_i Z^{r_i lambda} + (q - 1) F_i(lambda):
    each row of T_v Z^lambda becomes (T_v T_i) Z^{r_i lambda} plus +-(q - 1)
    T_v Z^mu over the interval F_i(lambda) of the alpha_i^vee-string. The
    intervals are summed per string as a difference array.
    """
    if not len(C):
        return K, C
    _check_sum(C, 4.0)
    n = len(cor)
    lam, e, v = K[:, :n], K[:, n], K[:, n + 1]
    s = lam @ root
    refl = lam - s[:, None] * cor
    vr = widx.rmul_table(i)[v]
    lengths = widx.lengths()
    up = lengths[vr] > lengths[v]
    dn = ~up
    parts = [
        (np.column_stack([refl[up], e[up], vr[up]]), C[up]),
        (np.column_stack([refl[dn], e[dn] + N, vr[dn]]), C[dn]),
        (np.column_stack([refl[dn], e[dn] + N, v[dn]]), C[dn]),
        (np.column_stack([refl[dn], e[dn], v[dn]]), -C[dn]),
    ]
    nz = s != 0
    if nz.any():
        parts.append(_interval_sums(lam[nz], e[nz], v[nz], C[nz], s[nz], cor, N))
    K2 = np.concatenate([p[0] for p in parts])
    C2 = np.concatenate([p[1] for p in parts])
    return reduce_rows(K2, C2)


def _interval_sums(lam, e, v, C, s, cor, N):
    """Rows of sum sign(s) (q - 1) c T_v Z^mu over mu in F_i(lambda)."""
    j = int(np.flatnonzero(cor)[0])
    k = lam[:, j] // cor[j]
    base = lam - k[:, None] * cor
    # s > 0: positions k - s + 1 .. k; s < 0: positions k + 1 .. k - s
    lo = np.where(s > 0, k - s + 1, k + 1)
    hi = np.where(s > 0, k, k - s) + 1
    c = np.sign(s) * C
    group = np.concatenate([
        np.column_stack([base, e + N, v]), np.column_stack([base, e, v]),
        np.column_stack([base, e + N, v]), np.column_stack([base, e, v])])
    pos = np.concatenate([lo, lo, hi, hi])
    val = np.concatenate([c, -c, -c, c])
    K, val = reduce_rows(np.column_stack([group, pos]), val, keep_zeros=True)
    group, pos = K[:, :-1], K[:, -1]
    gkey = _pack(group)[0]
    new_group = np.r_[True, gkey[1:] != gkey[:-1]]
    cs = np.cumsum(val)
    before = np.r_[0, cs[:-1]]
    run = cs - before[np.flatnonzero(new_group)][np.cumsum(new_group) - 1]
    # segment [pos_j, pos_{j+1}) carries run_j when the next event is in the same group
    nxt = np.r_[pos[1:], pos[-1]]
    same = np.r_[~new_group[1:], False]
    seg = same & (run != 0)
    length = np.where(seg, nxt - pos, 0)
    src = np.repeat(np.arange(len(pos)), length)
    off = np.arange(len(src)) - np.repeat(np.cumsum(length) - length, length)
    g = group[src]
    pts = g[:, :len(cor)] + (pos[src] + off)[:, None] * cor
    return np.column_stack([pts, g[:, len(cor):]]), run[src]


def convolve_rows(blocks: list[tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]]
                  ) -> tuple[np.ndarray, np.ndarray]:
    """
    Sum over blocks of X * Y with X rows [lambda..., e, v] and Y rows
    [mu..., e]: the row [lambda + mu, e + e', v] receives c c'.
    """
    blocks = [b for b in blocks if len(b[1]) and len(b[3])]
    if not blocks:
        return np.zeros((0, 0), dtype=np.int64), np.zeros(0, dtype=np.int64)
    total = 0.0
    for _, CX, _, CY in blocks:
        total += float(np.abs(CX).astype(np.float64).sum()) * float(np.abs(CY).astype(np.float64).sum())
    if total >= _LIMIT / 4:
        raise Overflow
    dims = blocks[0][2].shape[1]
    lo = np.min([KX[:, :dims].min(axis=0) + KY.min(axis=0) for KX, _, KY, _ in blocks], axis=0)
    hi = np.max([KX[:, :dims].max(axis=0) + KY.max(axis=0) for KX, _, KY, _ in blocks], axis=0)
    strides = np.ones(dims, dtype=np.int64)
    size = 1
    for d in reversed(range(dims)):
        strides[d] = size
        size *= int(hi[d] - lo[d] + 1)
    if size >= _LIMIT:
        raise Overflow
    prepared = []
    vmax = 0
    for KX, CX, KY, CY in blocks:
        base = KX[:, :dims].min(axis=0)
        # split lo between the factors so that key(x) + key(y) = key(x + y)
        prepared.append((KX[:, dims], (KX[:, :dims] - base) @ strides, CX,
                         (KY - (lo - base)) @ strides, CY))
        vmax = max(vmax, int(KX[:, dims].max()))
    dense = total < _FLOAT_EXACT and size <= _DENSE_MAX
    outK, outC = [], []
    for vi in range(vmax + 1):
        parts = []
        for vx, kx, cx, ky, cy in prepared:
            sel = vx == vi
            if sel.any():
                parts.append((kx[sel], cx[sel], ky, cy))
        if not parts:
            continue
        k, c = _accumulate_dense(parts, size) if dense else _accumulate_sorted(parts)
        cols = []
        rem = k
        for st in strides.tolist():
            q, rem = np.divmod(rem, st)
            cols.append(q)
        coords = np.stack(cols, axis=1) + lo
        outK.append(np.column_stack([coords, np.full(len(k), vi, dtype=np.int64)]))
        outC.append(c)
    return np.concatenate(outK), np.concatenate(outC)


def _pair_chunks(parts):
    for kx, cx, ky, cy in parts:
        step = max(1, _CHUNK // len(kx))
        for s in range(0, len(ky), step):
            yield ((kx[:, None] + ky[None, s:s + step]).ravel(),
                   (cx[:, None] * cy[None, s:s + step]).ravel())


def _accumulate_dense(parts, size: int) -> tuple[np.ndarray, np.ndarray]:
    # exact: every partial sum is an integer below 2^53
    acc = np.zeros(size, dtype=np.float64)
    for k, c in _pair_chunks(parts):
        acc += np.bincount(k, weights=c.astype(np.float64), minlength=size)
    idx = np.flatnonzero(acc)
    return idx, acc[idx].astype(np.int64)


def _accumulate_sorted(parts) -> tuple[np.ndarray, np.ndarray]:
    keys, vals = [], []
    for k, c in _pair_chunks(parts):
        keys.append(k)
        vals.append(c)
        if len(keys) > 8:
            rk, rv = _reduce_keys(np.concatenate(keys), np.concatenate(vals))
            keys, vals = [rk], [rv]
    k, c = _reduce_keys(np.concatenate(keys), np.concatenate(vals))
    nz = c != 0
    return k[nz], c[nz]


def _reduce_keys(k: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.argsort(k, kind="stable")
    k, v = k[order], v[order]
    starts = np.flatnonzero(np.r_[True, k[1:] != k[:-1]])
    return k[starts], np.add.reduceat(v, starts)
