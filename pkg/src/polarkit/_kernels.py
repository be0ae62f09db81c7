"""Numba kernels for the minimum-weight codeword search.

The enumeration walks all weight-w vectors x in GF(2)^N (N <= 64, packed in
a uint64) with a revolving-door combination order, so each step swaps one
support element for another.  Membership is tracked through the syndrome of
a parity-check matrix packed into uint64 columns: two XORs per step, zero
syndrome means x is a codeword.

The walk fixes the largest support element per task and emits the
revolving-door order for the remaining w-1 elements via an explicit stack
over the recursion

    G(n, t) = G(n-1, t) ++ [S + {n-1} for S in reversed(G(n-1, t-1))]

whose block transition swaps exactly one element.  Tasks are independent and
run under prange.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

# stack entry modes
_FWD = 0
_REV = 1
_BRIDGE_FWD = 2
_BRIDGE_REV = 3


@njit(cache=True, inline="always")
def _leader(u):
    """Index of the lowest set bit of u (u != 0)."""
    return int(np.uint64(64) - np.uint64(1) - _clz(u & (~u + np.uint64(1))))


@njit(cache=True, inline="always")
def _clz(v):
    """Count leading zeros of a nonzero uint64."""
    c = np.uint64(0)
    if v <= np.uint64(0xFFFFFFFF):
        c += np.uint64(32)
        v <<= np.uint64(32)
    if v <= np.uint64(0xFFFFFFFFFFFF):
        c += np.uint64(16)
        v <<= np.uint64(16)
    if v <= np.uint64(0xFFFFFFFFFFFFFF):
        c += np.uint64(8)
        v <<= np.uint64(8)
    if v <= np.uint64(0xFFFFFFFFFFFFFFF):
        c += np.uint64(4)
        v <<= np.uint64(4)
    if v <= np.uint64(0x3FFFFFFFFFFFFFFF):
        c += np.uint64(2)
        v <<= np.uint64(2)
    if v <= np.uint64(0x7FFFFFFFFFFFFFFF):
        c += np.uint64(1)
    return c


@njit(cache=True)
def _count_task(a, w, sdcol, rows, per_leader):
    """Walk all weight-w masks whose largest support element is `a`.

    Updates per_leader in place; returns the number of codewords found.
    """
    t = w - 1
    syn = sdcol[a]
    x = np.uint64(1) << np.uint64(a)
    # current combination of the low t elements
    comb = np.empty(t + 1, dtype=np.int64)
    for i in range(t):
        comb[i] = i
        syn ^= sdcol[i]
        x ^= np.uint64(1) << np.uint64(i)

    hits = 0
    if syn == np.uint64(0):
        u = np.uint64(0)
        for i in range(t):
            u ^= rows[comb[i]]
        u ^= rows[a]
        per_leader[_leader(u)] += 1
        hits += 1
    if t == 0 or a == t:
        return hits  # single combination in this task

    # explicit stack over the revolving-door recursion for G(a, t)
    depth = 3 * (a + 2)
    sn = np.empty(depth, dtype=np.int64)
    st = np.empty(depth, dtype=np.int64)
    sm = np.empty(depth, dtype=np.int64)
    top = 0
    sn[0], st[0], sm[0] = a, t, _FWD
    top = 1
    while top > 0:
        top -= 1
        n = sn[top]
        tt = st[top]
        mode = sm[top]
        if mode == _FWD or mode == _REV:
            if tt == 0 or n == tt:
                continue  # leaf: single combination, no transitions
            if mode == _FWD:
                # G(n-1,t) ; bridge ; rev(G(n-1,t-1))+{n-1}
                sn[top], st[top], sm[top] = n - 1, tt - 1, _REV
                sn[top + 1], st[top + 1], sm[top + 1] = n, tt, _BRIDGE_FWD
                sn[top + 2], st[top + 2], sm[top + 2] = n - 1, tt, _FWD
                top += 3
            else:
                # G(n-1,t-1)+{n-1} ; bridge back ; rev(G(n-1,t))
                sn[top], st[top], sm[top] = n - 1, tt, _REV
                sn[top + 1], st[top + 1], sm[top + 1] = n, tt, _BRIDGE_REV
                sn[top + 2], st[top + 2], sm[top + 2] = n - 1, tt - 1, _FWD
                top += 3
        else:
            if mode == _BRIDGE_FWD:
                # last(G(n-1,t)) -> last(G(n-1,t-1)) + {n-1}
                out = tt - 2 if tt >= 2 else n - 2
                inn = n - 1
            else:
                out = n - 1
                inn = tt - 2 if tt >= 2 else n - 2
            # swap: comb is kept as an unordered support array of size t
            for i in range(t):
                if comb[i] == out:
                    comb[i] = inn
                    break
            syn ^= sdcol[out] ^ sdcol[inn]
            x ^= (np.uint64(1) << np.uint64(out)) | (np.uint64(1) << np.uint64(inn))
            if syn == np.uint64(0):
                u = np.uint64(0)
                for i in range(t):
                    u ^= rows[comb[i]]
                u ^= rows[a]
                per_leader[_leader(u)] += 1
                hits += 1
    return hits


@njit(cache=True, parallel=True)
def count_weight_w(N, w, sdcol, rows):
    """Count weight-w codewords; returns per-leader counts (length N)."""
    counts = np.zeros((N, N), dtype=np.int64)
    if w == 0:
        return counts.sum(axis=0)
    for a in prange(w - 1, N):
        _count_task(a, w, sdcol, rows, counts[a])
    return counts.sum(axis=0)
