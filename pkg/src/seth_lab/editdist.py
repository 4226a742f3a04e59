"""Exact unit-cost edit distance over byte strings, via several engines.

All engines accept arbitrary byte alphabets; the gadget layer restricts
itself to the symbols '0'..'3' but nothing here cares.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np
from numba import njit

BRUTEFORCE_CAP = 8


def _as_array(s: str) -> np.ndarray:
    return np.frombuffer(s.encode("latin-1"), dtype=np.uint8)


@njit(cache=True)
def _dp_kernel(xa, ya):
    n = ya.shape[0]
    prev = np.empty(n + 1, np.int64)
    cur = np.empty(n + 1, np.int64)
    for j in range(n + 1):
        prev[j] = j
    for i in range(1, xa.shape[0] + 1):
        cur[0] = i
        ci = xa[i - 1]
        for j in range(1, n + 1):
            best = prev[j - 1] + (0 if ci == ya[j - 1] else 1)
            if prev[j] + 1 < best:
                best = prev[j] + 1
            if cur[j - 1] + 1 < best:
                best = cur[j - 1] + 1
            cur[j] = best
        prev, cur = cur, prev
    return prev[n]


def edit_distance_dp(x: str, y: str) -> int:
    """Classic Levenshtein DP; two rows, shorter string as the row."""
    if len(y) > len(x):
        x, y = y, x
    if not y:
        return len(x)
    return int(_dp_kernel(_as_array(x), _as_array(y)))


@njit(cache=True)
def _banded_kernel(xa, ya, k):
    m = xa.shape[0]
    n = ya.shape[0]
    cap = k + 1
    # Column j of the matrix lives at index j + 1; index 0 is a guard cell
    # so that reads at j - 1 = -1 stay in bounds and cost `cap`.
    prev = np.full(n + 2, cap, np.int64)
    cur = np.full(n + 2, cap, np.int64)
    hi0 = min(n, k)
    for j in range(hi0 + 1):
        prev[j + 1] = j
    lo, hi = 0, hi0
    for i in range(1, m + 1):
        nlo = i - k
        if nlo < 0:
            nlo = 0
        nhi = i + k
        if nhi > n:
            nhi = n
        ci = xa[i - 1]
        # left-neighbor guard: the cell just before the band still holds a
        # value from two rows back in the reused buffer
        cur[nlo] = cap
        for j in range(nlo, nhi + 1):
            if j == 0:
                cur[1] = i if i < cap else cap
                continue
            best = prev[j] + (0 if ci == ya[j - 1] else 1)
            if prev[j + 1] + 1 < best:
                best = prev[j + 1] + 1
            if cur[j] + 1 < best:
                best = cur[j] + 1
            cur[j + 1] = best if best < cap else cap
        # Reset guard cells just outside the new band so stale values from
        # two rows back are never read.
        cur[nlo] = cap
        if nhi + 2 < n + 2:
            cur[nhi + 2] = cap
        prev, cur = cur, prev
        lo, hi = nlo, nhi
    if lo <= n <= hi:
        d = prev[n + 1]
        if d <= k:
            return d
    return -1


def edit_distance_banded(x: str, y: str, k: int):
    """Edit distance restricted to the |i-j| <= k band.

    Returns the exact distance when it is <= k, else None. Any alignment
    leaving the band costs more than k, so the band cannot underestimate.
    """
    if k < 0:
        raise ValueError("band width k must be nonnegative")
    if abs(len(x) - len(y)) > k:
        return None
    if not x and not y:
        return 0
    if not x or not y:
        d = max(len(x), len(y))
        return d if d <= k else None
    d = int(_banded_kernel(_as_array(x), _as_array(y), k))
    return None if d < 0 else d


def edit_distance_bitparallel(x: str, y: str) -> int:
    """Bit-vector edit distance (Myers/Hyyro style).

    The shorter string becomes the pattern, held in one arbitrary-width
    Python integer, so the per-character update cost is O(m/64) words.
    """
    if len(x) > len(y):
        x, y = y, x
    m = len(x)
    if m == 0:
        return len(y)
    peq = {}
    for i, c in enumerate(x):
        peq[c] = peq.get(c, 0) | (1 << i)
    mask = (1 << m) - 1
    msb = 1 << (m - 1)
    vp = mask
    vn = 0
    dist = m
    get = peq.get
    for c in y:
        eq = get(c, 0)
        d0 = ((((eq & vp) + vp) & mask) ^ vp) | eq | vn
        hp = vn | (~(d0 | vp) & mask)
        hn = d0 & vp
        if hp & msb:
            dist += 1
        elif hn & msb:
            dist -= 1
        hp = ((hp << 1) | 1) & mask
        hn = (hn << 1) & mask
        vp = hn | (~(d0 | hp) & mask)
        vn = hp & d0
    return dist


def edit_distance_bruteforce(x: str, y: str) -> int:
    """Exponential oracle: minimum over all monotone alignments.

    Aligned mismatches cost one substitution; unaligned symbols cost one
    deletion each. Only usable for strings of length <= 8.
    """
    if len(x) > BRUTEFORCE_CAP or len(y) > BRUTEFORCE_CAP:
        raise ValueError(
            f"bruteforce oracle only accepts strings of length <= {BRUTEFORCE_CAP}"
        )
    lx, ly = len(x), len(y)
    best = lx + ly
    for k in range(min(lx, ly), -1, -1):
        if 2 * k <= lx + ly - best:
            break  # even a mismatch-free alignment of size k cannot win
        for xi in combinations(range(lx), k):
            for yi in combinations(range(ly), k):
                cost = (lx - k) + (ly - k)
                for i, j in zip(xi, yi):
                    if x[i] != y[j]:
                        cost += 1
                if cost < best:
                    best = cost
    return best


@dataclass(frozen=True)
class EditOp:
    kind: str  # "match" | "substitute" | "delete" | "insert"
    i: int  # position in x (next unconsumed for "insert")
    j: int  # position in y (already consumed for "delete")
    symbol: str = ""  # symbol written to the output ("" for delete)


@dataclass(frozen=True)
class EditOps:
    ops: tuple
    cost: int


def edit_alignment(x: str, y: str) -> EditOps:
    """One optimal edit trace, full-matrix traceback.

    Ties broken match/substitute first, then delete-from-x, then insert;
    this keeps traces reproducible across runs.
    """
    m, n = len(x), len(y)
    dist = np.empty((m + 1, n + 1), dtype=np.int64)
    dist[0, :] = np.arange(n + 1)
    dist[:, 0] = np.arange(m + 1)
    xa, ya = _as_array(x), _as_array(y)
    ar = np.arange(n + 1)
    for i in range(1, m + 1):
        sub = dist[i - 1, :-1] + (ya != xa[i - 1])
        t = np.minimum(dist[i - 1, 1:] + 1, sub)
        full = np.concatenate(([dist[i - 1, 0] + 1], t))
        dist[i] = np.minimum.accumulate(full - ar) + ar
    ops = []
    i, j = m, n
    while i > 0 or j > 0:
        here = dist[i, j]
        if i > 0 and j > 0 and here == dist[i - 1, j - 1] + (x[i - 1] != y[j - 1]):
            kind = "match" if x[i - 1] == y[j - 1] else "substitute"
            ops.append(EditOp(kind, i - 1, j - 1, y[j - 1]))
            i, j = i - 1, j - 1
        elif i > 0 and here == dist[i - 1, j] + 1:
            ops.append(EditOp("delete", i - 1, j))
            i -= 1
        else:
            ops.append(EditOp("insert", i, j - 1, y[j - 1]))
            j -= 1
    ops.reverse()
    cost = sum(1 for op in ops if op.kind != "match")
    assert cost == int(dist[m, n])
    return EditOps(ops=tuple(ops), cost=cost)


def apply_ops(x: str, ops: EditOps) -> str:
    """Replay an edit trace on x; returns the transformed string."""
    out = []
    for op in ops.ops:
        if op.kind == "match":
            out.append(x[op.i])
        elif op.kind in ("substitute", "insert"):
            out.append(op.symbol)
        elif op.kind == "delete":
            pass
        else:
            raise ValueError(f"unknown op kind {op.kind!r}")
    return "".join(out)
