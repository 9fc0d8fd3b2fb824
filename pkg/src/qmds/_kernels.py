"""Compiled inner loops over GF(q^2): determinants, ranks, codeword weights.

Elements use the int encoding of :mod:`qmds.field`.  ``rank`` and
``min_weight`` take the tables ``exp``, ``log`` (``log[0] == -1``), ``qadd``
and ``qneg`` plus ``q``.  The minor kernels work on split coordinates
(``a % q``, ``a // q``) with a doubled exp table split the same way, so the
elimination loop never divides.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _add(a, b, q, qadd):
    return qadd[a % q, b % q] + q * qadd[a // q, b // q]


@njit(cache=True, inline="always")
def _neg(a, q, qneg):
    return qneg[a % q] + q * qneg[a // q]


@njit(cache=True, inline="always")
def _mul(a, b, exp, log, n):
    if a == 0 or b == 0:
        return 0
    return exp[(log[a] + log[b]) % n]


@njit(cache=True)
def _nonsingular(lo, hi, k, q, exp_lo, exp_hi, log, qadd, neg1):
    """Forward elimination on a k x k matrix held as split coordinates.

    ``lo``/``hi`` are the GF(q) coordinates of the entries and are modified
    in place.  ``exp_lo``/``exp_hi`` are the split exp table repeated twice so
    that a sum of two logs indexes it without reduction.  No division occurs
    in the inner loop.
    """
    n = exp_lo.shape[0] // 2
    lp = np.empty(k, dtype=np.int64)
    for c in range(k):
        piv = -1
        for r in range(c, k):
            if lo[r, c] != 0 or hi[r, c] != 0:
                piv = r
                break
        if piv < 0:
            return False
        if piv != c:
            for t in range(c, k):
                tmp = lo[c, t]
                lo[c, t] = lo[piv, t]
                lo[piv, t] = tmp
                tmp = hi[c, t]
                hi[c, t] = hi[piv, t]
                hi[piv, t] = tmp
        lpiv = log[lo[c, c] + q * hi[c, c]]
        for t in range(c + 1, k):
            lp[t] = log[lo[c, t] + q * hi[c, t]]
        for r in range(c + 1, k):
            a = lo[r, c] + q * hi[r, c]
            if a == 0:
                continue
            lf = (log[a] + neg1 + n - lpiv) % n
            for t in range(c + 1, k):
                if lp[t] >= 0:
                    e = lf + lp[t]
                    lo[r, t] = qadd[lo[r, t], exp_lo[e]]
                    hi[r, t] = qadd[hi[r, t], exp_hi[e]]
    return True


@njit(cache=True)
def rank(mat, q, exp, log, qadd, qneg):
    w = mat.copy()
    rows, cols = w.shape
    n = exp.shape[0]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for t in range(r, rows):
            if w[t, c] != 0:
                piv = t
                break
        if piv < 0:
            continue
        if piv != r:
            for t in range(cols):
                tmp = w[r, t]
                w[r, t] = w[piv, t]
                w[piv, t] = tmp
        inv_log = (n - log[w[r, c]]) % n
        for t in range(r + 1, rows):
            a = w[t, c]
            if a == 0:
                continue
            f = _neg(exp[(log[a] + inv_log) % n], q, qneg)
            for u in range(c, cols):
                w[t, u] = _add(w[t, u], _mul(f, w[r, u], exp, log, n), q, qadd)
        r += 1
    return r


@njit(cache=True)
def all_minors_nonsingular(g_lo, g_hi, q, exp_lo, exp_hi, log, qadd, neg1, limit):
    """Sweep k-subsets of columns in lexicographic order.

    Returns ``(checked, first_singular)`` where ``first_singular`` is the
    subset (length k) of the first singular minor, or an empty array.
    Stops after ``limit`` subsets.
    """
    k, ncols = g_lo.shape
    idx = np.arange(k)
    lo = np.empty((k, k), dtype=np.int64)
    hi = np.empty((k, k), dtype=np.int64)
    checked = 0
    while checked < limit:
        for r in range(k):
            for c in range(k):
                lo[r, c] = g_lo[r, idx[c]]
                hi[r, c] = g_hi[r, idx[c]]
        checked += 1
        if not _nonsingular(lo, hi, k, q, exp_lo, exp_hi, log, qadd, neg1):
            return checked, idx.copy()
        # next combination
        i = k - 1
        while i >= 0 and idx[i] == ncols - k + i:
            i -= 1
        if i < 0:
            break
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1
    return checked, np.empty(0, dtype=np.int64)


@njit(cache=True)
def subsets_nonsingular(g_lo, g_hi, subsets, q, exp_lo, exp_hi, log, qadd, neg1):
    """Index of the first singular minor among the given column subsets, or -1."""
    k = g_lo.shape[0]
    lo = np.empty((k, k), dtype=np.int64)
    hi = np.empty((k, k), dtype=np.int64)
    for s in range(subsets.shape[0]):
        for r in range(k):
            for c in range(k):
                lo[r, c] = g_lo[r, subsets[s, c]]
                hi[r, c] = g_hi[r, subsets[s, c]]
        if not _nonsingular(lo, hi, k, q, exp_lo, exp_hi, log, qadd, neg1):
            return s
    return -1


@njit(cache=True)
def min_weight(g, q, exp, log, qadd, qneg):
    """Minimum Hamming weight over all nonzero F-combinations of the rows of g."""
    k, ncols = g.shape
    order = exp.shape[0] + 1
    n = exp.shape[0]
    # scaled[e, a] = a * g[e]
    scaled = np.empty((k, order, ncols), dtype=np.int64)
    for e in range(k):
        for a in range(order):
            for c in range(ncols):
                scaled[e, a, c] = _mul(a, g[e, c], exp, log, n)
    partial = np.zeros((k + 1, ncols), dtype=np.int64)
    digits = np.zeros(k, dtype=np.int64)
    best = ncols + 1
    # odometer over messages; partial[e+1] = partial[e] + digits[e] * g[e]
    level = 0
    while True:
        for e in range(level, k):
            for c in range(ncols):
                partial[e + 1, c] = _add(partial[e, c], scaled[e, digits[e], c], q, qadd)
        wt = 0
        for c in range(ncols):
            if partial[k, c] != 0:
                wt += 1
        if 0 < wt < best:
            best = wt
        e = k - 1
        while e >= 0 and digits[e] == order - 1:
            digits[e] = 0
            e -= 1
        if e < 0:
            break
        digits[e] += 1
        level = e
    return best
