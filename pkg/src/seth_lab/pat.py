"""Pattern-matching distance: cheapest edit distance from a pattern to any
contiguous substring of a text (the empty substring included)."""

import numpy as np
from numba import njit

from .editdist import _as_array, edit_distance_dp

BRUTEFORCE_TEXT_CAP = 200


def pat_distance(p1: str, p2: str) -> int:
    """min over substrings x of p2 of EDIT(p1, x), in one bit-parallel pass.

    Same recurrence as the global bit-vector distance, except the text may
    start for free at any position and the minimum is tracked over all end
    positions.
    """
    m = len(p1)
    if m == 0:
        return 0
    if not p2:
        return m
    peq = {}
    for i, c in enumerate(p1):
        peq[c] = peq.get(c, 0) | (1 << i)
    mask = (1 << m) - 1
    msb = 1 << (m - 1)
    vp = mask
    vn = 0
    score = m
    best = m  # empty substring
    get = peq.get
    for c in p2:
        eq = get(c, 0)
        d0 = ((((eq & vp) + vp) & mask) ^ vp) | eq | vn
        hp = vn | (~(d0 | vp) & mask)
        hn = d0 & vp
        if hp & msb:
            score += 1
        elif hn & msb:
            score -= 1
        hp = (hp << 1) & mask
        hn = (hn << 1) & mask
        vp = hn | (~(d0 | hp) & mask)
        vn = hp & d0
        if score < best:
            best = score
    return best


@njit(cache=True)
def _pat_dp_kernel(pa, ta):
    n = ta.shape[0]
    prev = np.zeros(n + 1, np.int64)
    cur = np.empty(n + 1, np.int64)
    for i in range(1, pa.shape[0] + 1):
        cur[0] = i
        ci = pa[i - 1]
        for j in range(1, n + 1):
            best = prev[j - 1] + (0 if ci == ta[j - 1] else 1)
            if prev[j] + 1 < best:
                best = prev[j] + 1
            if cur[j - 1] + 1 < best:
                best = cur[j - 1] + 1
            cur[j] = best
        prev, cur = cur, prev
    best = prev[0]
    for j in range(1, n + 1):
        if prev[j] < best:
            best = prev[j]
    return best


def pat_distance_dp(p1: str, p2: str) -> int:
    """Semi-global DP evaluation of the same quantity; cross-check engine."""
    if not p1:
        return 0
    if not p2:
        return len(p1)
    return int(_pat_dp_kernel(_as_array(p1), _as_array(p2)))


def pat_distance_bruteforce(p1: str, p2: str) -> int:
    """Explicit minimum over all O(|p2|^2) substrings; the oracle."""
    if len(p2) > BRUTEFORCE_TEXT_CAP:
        raise ValueError(
            f"bruteforce text capped at {BRUTEFORCE_TEXT_CAP} symbols"
        )
    best = len(p1)  # empty substring
    n = len(p2)
    for i in range(n):
        for j in range(i + 1, n + 1):
            d = edit_distance_dp(p1, p2[i:j])
            if d < best:
                best = d
    return best
