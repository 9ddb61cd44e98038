"""Kernel selection: compiled cover search when available, pure otherwise.

The compiled kernel (fuzzydom._cover_cy, built from Cython at install time)
works on 64-bit masks and 64-bit weight arithmetic, so it only accepts
instances where every intermediate fits: at most _COMPILED_MAX_N vertices.
The bound arithmetic multiplies a weight sum (≤ n * 10**6 after scaling)
by lcm(1..n), which stays below 2**62 for n ≤ 24. Larger instances, and
any run with FUZZYDOM_PURE=1 in the environment, use the pure kernel.

Both kernels implement the contract documented in _cover_py and are tested
for exact agreement, including tie-breaks.
"""

from __future__ import annotations

import os
from typing import Optional, Sequence

from . import _cover_py

_COMPILED_MAX_N = 24
# scaled sigma values are ≤ 10**6 each; see _cover_py for the bound algebra
_COMPILED_MAX_WEIGHT = 10 ** 6

if os.environ.get("FUZZYDOM_PURE") == "1":
    _compiled = None
else:
    try:
        from . import _cover_cy as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None


def compiled_kernel_loaded() -> bool:
    return _compiled is not None


def _compiled_eligible(weights: Sequence[int], n: int) -> bool:
    return n <= _COMPILED_MAX_N and all(w <= _COMPILED_MAX_WEIGHT for w in weights)


def solve_min_cover(
    cover_masks: Sequence[int],
    weights: Sequence[int],
    required_mask: int,
) -> Optional[tuple[int, int]]:
    if _compiled is not None and _compiled_eligible(weights, len(cover_masks)):
        return _compiled.solve_min_cover(list(cover_masks), list(weights),
                                         required_mask)
    return _cover_py.solve_min_cover(cover_masks, weights, required_mask)


def kernel_name() -> str:
    """Which kernel solve_min_cover will use for small instances."""
    return "compiled" if _compiled is not None else "pure"
