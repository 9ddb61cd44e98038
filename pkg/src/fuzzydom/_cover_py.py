"""Pure-Python exact min-weight set-cover kernel.

This is the hot search behind the domination solvers. Vertices are bit
positions; cover_masks[u] is the set of requirement bits that picking u
satisfies; weights are nonnegative scaled integers. The search is a
branch-and-bound over "pick a coverer of the lowest uncovered requirement",
with an explicit stack so it is reentrant and never hits recursion limits.

A compiled twin lives in _cover_cy; both must stay behaviorally identical
(tests compare them directly). The independent brute-force oracle in
domination.py intentionally shares none of this code.

Tie-break contract: among all optimal covers, return the one whose sorted
index tuple is lexicographically smallest. Two subtleties keep that exact:

* pruning is strict (only when the bound provably exceeds the incumbent),
  so equal-weight alternatives are never cut off;
* a zero-weight vertex can sit in an optimal cover without covering
  anything new, and adding such a vertex below the cover's maximum index
  makes the tuple lexicographically smaller. The search only enumerates
  covers where every member covers something, so each candidate is
  augmented with every zero-weight vertex below its maximum index before
  comparison. Every augmented candidate is still an optimal cover, and the
  true lexicographic minimum is the augmentation of some enumerated cover.

Lower bound (admissible): for the uncovered requirement set U, every cover
pays at least sum over v in U of min over coverers u of w(u)/|cover(u)&U|.
Scaling by M = lcm(1..n) keeps each term an exact integer.
"""

from __future__ import annotations

from math import lcm
from typing import Optional, Sequence


def lex_tuple_less(a: int, b: int) -> bool:
    """Compare bitmasks as sorted ascending index tuples, lexicographically.

    A strict prefix is smaller than its extension, so this is NOT plain
    integer comparison of the masks.
    """
    while True:
        if a == b:
            return False
        if a == 0:
            return True
        if b == 0:
            return False
        la = a & -a
        lb = b & -b
        if la != lb:
            return la < lb
        a ^= la
        b ^= lb


def solve_min_cover(
    cover_masks: Sequence[int],
    weights: Sequence[int],
    required_mask: int,
) -> Optional[tuple[int, int]]:
    """Minimize total weight of S with union(cover_masks[u] for u in S) ⊇ required.

    Returns (weight, chosen_mask) with the tie-break documented above, or
    None when some required bit has no coverer.
    """
    n = len(cover_masks)
    if len(weights) != n:
        raise ValueError("cover_masks and weights must have equal length")
    if required_mask >> n:
        raise ValueError("required_mask references vertices beyond range")

    coverers: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        m = cover_masks[u] & required_mask
        while m:
            low = m & -m
            coverers[low.bit_length() - 1].append(u)
            m ^= low

    zero_mask = 0
    for u in range(n):
        if weights[u] == 0:
            zero_mask |= 1 << u

    forced_mask = 0
    rm = required_mask
    while rm:
        low = rm & -rm
        rm ^= low
        options = coverers[low.bit_length() - 1]
        if not options:
            return None
        if len(options) == 1:
            forced_mask |= 1 << options[0]

    def augment(mask: int) -> int:
        if mask == 0:
            return 0
        below_top = (1 << (mask.bit_length() - 1)) - 1
        return mask | (zero_mask & below_top)

    def weight_of(mask: int) -> int:
        total = 0
        while mask:
            low = mask & -mask
            total += weights[low.bit_length() - 1]
            mask ^= low
        return total

    scale = lcm(*range(1, n + 1)) if n else 1
    covered0 = 0
    m = forced_mask
    while m:
        low = m & -m
        covered0 |= cover_masks[low.bit_length() - 1]
        m ^= low

    best_weight: Optional[int] = None
    best_mask = 0

    # stack of (chosen_mask, chosen_weight, covered_mask)
    stack = [(forced_mask, weight_of(forced_mask), covered0)]
    while stack:
        chosen, weight, covered = stack.pop()
        uncovered = required_mask & ~covered
        if uncovered == 0:
            candidate = augment(chosen)
            if best_weight is None or weight < best_weight or (
                    weight == best_weight and lex_tuple_less(candidate, best_mask)):
                best_weight = weight
                best_mask = candidate
            continue
        if best_weight is not None:
            bound = 0
            m = uncovered
            overrun = False
            while m:
                low = m & -m
                m ^= low
                cheapest = None
                for u in coverers[low.bit_length() - 1]:
                    hits = (cover_masks[u] & uncovered).bit_count()
                    term = weights[u] * (scale // hits)
                    if cheapest is None or term < cheapest:
                        cheapest = term
                bound += cheapest  # type: ignore[operator]
                if weight * scale + bound > best_weight * scale:
                    overrun = True
                    break
            if overrun:
                continue
        low = uncovered & -uncovered
        branch_v = low.bit_length() - 1
        # reversed so the lowest-index coverer is explored first (LIFO)
        for u in reversed(coverers[branch_v]):
            bit = 1 << u
            if chosen & bit:
                continue
            stack.append((chosen | bit, weight + weights[u],
                          covered | cover_masks[u]))

    assert best_weight is not None  # every required bit had a coverer
    return best_weight, best_mask
