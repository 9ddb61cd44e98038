# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure set-cover kernel in _cover_py.

Same algorithm, same tie-break, same results bit for bit; tests enforce the
equivalence. The selector in _cover only routes instances here when every
intermediate fits 64-bit arithmetic (n <= 24 and scaled weights <= 10**6,
so weight * lcm(1..n) stays far below 2**63). Keep any behavior change in
lockstep with _cover_py.
"""

from libc.stdint cimport int64_t, uint64_t


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil


cdef inline bint _lex_tuple_less(uint64_t a, uint64_t b) nogil:
    # sorted ascending index tuples, lexicographic; prefix beats extension
    cdef uint64_t la, lb
    while True:
        if a == b:
            return False
        if a == 0:
            return True
        if b == 0:
            return False
        la = a & (~a + 1)
        lb = b & (~b + 1)
        if la != lb:
            return la < lb
        a ^= la
        b ^= lb


cdef inline int64_t _gcd(int64_t a, int64_t b) nogil:
    cdef int64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


def solve_min_cover(cover_masks, weights, required_mask):
    """See _cover_py.solve_min_cover; identical contract and tie-break."""
    cdef int n = len(cover_masks)
    if len(weights) != n:
        raise ValueError("cover_masks and weights must have equal length")
    if n > 62:
        raise ValueError("compiled kernel handles at most 62 vertices")
    cdef uint64_t required = <uint64_t> required_mask
    if n < 64 and (required >> n) != 0:
        raise ValueError("required_mask references vertices beyond range")

    cdef uint64_t masks[64]
    cdef int64_t wts[64]
    cdef int i, u, v
    for i in range(n):
        masks[i] = <uint64_t> cover_masks[i]
        wts[i] = <int64_t> weights[i]
        if wts[i] < 0:
            raise ValueError("weights must be nonnegative")

    cdef int coverers[64][64]
    cdef int cover_counts[64]
    for v in range(n):
        cover_counts[v] = 0
    for u in range(n):
        for v in range(n):
            if (masks[u] >> v) & 1 and (required >> v) & 1:
                coverers[v][cover_counts[v]] = u
                cover_counts[v] += 1

    cdef uint64_t zero_mask = 0
    for u in range(n):
        if wts[u] == 0:
            zero_mask |= (<uint64_t> 1) << u

    cdef uint64_t forced = 0
    cdef uint64_t rm = required, low
    while rm:
        low = rm & (~rm + 1)
        rm ^= low
        v = __builtin_ctzll(low)
        if cover_counts[v] == 0:
            return None
        if cover_counts[v] == 1:
            forced |= (<uint64_t> 1) << coverers[v][0]

    cdef int64_t scale = 1
    for i in range(2, n + 1):
        scale = scale // _gcd(scale, i) * i

    cdef uint64_t covered0 = 0
    cdef int64_t forced_weight = 0
    rm = forced
    while rm:
        low = rm & (~rm + 1)
        rm ^= low
        u = __builtin_ctzll(low)
        covered0 |= masks[u]
        forced_weight += wts[u]

    # DFS stack; depth <= n and each level parks < n siblings, so n*n slots
    cdef uint64_t st_chosen[4096]
    cdef uint64_t st_covered[4096]
    cdef int64_t st_weight[4096]
    cdef int top = 0
    st_chosen[0] = forced
    st_weight[0] = forced_weight
    st_covered[0] = covered0
    top = 1

    cdef bint have_best = False
    cdef int64_t best_weight = 0
    cdef uint64_t best_mask = 0

    cdef uint64_t chosen, covered, uncovered, m, candidate, below_top
    cdef int64_t weight, bound, term, cheapest
    cdef int hits, branch_v, k, topbit
    cdef bint overrun

    while top > 0:
        top -= 1
        chosen = st_chosen[top]
        weight = st_weight[top]
        covered = st_covered[top]
        uncovered = required & ~covered
        if uncovered == 0:
            candidate = chosen
            if chosen != 0:
                topbit = 63 - __builtin_clzll(chosen)
                below_top = ((<uint64_t> 1) << topbit) - 1
                candidate = chosen | (zero_mask & below_top)
            if (not have_best or weight < best_weight
                    or (weight == best_weight
                        and _lex_tuple_less(candidate, best_mask))):
                have_best = True
                best_weight = weight
                best_mask = candidate
            continue
        if have_best:
            bound = 0
            overrun = False
            m = uncovered
            while m:
                low = m & (~m + 1)
                m ^= low
                v = __builtin_ctzll(low)
                cheapest = -1
                for k in range(cover_counts[v]):
                    u = coverers[v][k]
                    hits = __builtin_popcountll(masks[u] & uncovered)
                    term = wts[u] * (scale // hits)
                    if cheapest < 0 or term < cheapest:
                        cheapest = term
                bound += cheapest
                if weight * scale + bound > best_weight * scale:
                    overrun = True
                    break
            if overrun:
                continue
        low = uncovered & (~uncovered + 1)
        branch_v = __builtin_ctzll(low)
        for k in range(cover_counts[branch_v] - 1, -1, -1):
            u = coverers[branch_v][k]
            if (chosen >> u) & 1:
                continue
            if top >= 4096:
                raise RuntimeError("search stack overflow")
            st_chosen[top] = chosen | ((<uint64_t> 1) << u)
            st_weight[top] = weight + wts[u]
            st_covered[top] = covered | masks[u]
            top += 1

    assert have_best
    return int(best_weight), int(best_mask)
