"""Two-phase simplex over exact rationals.

Solves min c.x subject to rows.x >= rhs, x >= 0, with every number a
fractions.Fraction. Intended for the small covering programs this package
produces (0/1 rows, positive right-hand sides, unit costs), but written
against the general form.

Bland's rule is used unconditionally for both the entering and the leaving
choice: covering programs are highly degenerate and exact arithmetic makes
cycling a real possibility, while instance sizes here make speed a
non-issue. The solver is fully deterministic: identical input produces an
identical basic optimal solution.

Costs must be nonnegative; together with x >= 0 that bounds the objective
below, so the solve can end only in "optimal" or "infeasible".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Vector = tuple[Fraction, ...]


def simplex_minimize(
    costs: Sequence[Fraction],
    rows: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
) -> Optional[tuple[Fraction, Vector]]:
    """Exact optimum of min costs.x, rows.x >= rhs, x >= 0.

    Returns (value, x) at a basic optimal solution, or None if infeasible.
    """
    n = len(costs)
    m = len(rows)
    zero = Fraction(0)
    one = Fraction(1)
    costs = [Fraction(c) for c in costs]
    if any(c < 0 for c in costs):
        raise ValueError("costs must be nonnegative to keep the program bounded")
    if len(rhs) != m or any(len(r) != n for r in rows):
        raise ValueError("inconsistent constraint dimensions")
    if m == 0:
        return zero, tuple([zero] * n)

    # Normalize every row to rhs >= 0, flipping ">=" rows with negative rhs
    # would change their sense; instead multiply row and rhs by -1 and keep
    # the inequality as "<=" encoded via the surplus sign. Simpler and
    # sufficient here: rewrite each constraint as equality
    #     row.x - s_i = rhs_i   (surplus s_i >= 0)      when rhs_i >= 0
    #     -row.x + s_i = -rhs_i (slack s_i >= 0)        when rhs_i < 0
    # so the stored equality always has a nonnegative right-hand side.
    # Columns: x (n) | s (m) | artificial (m).
    width = n + 2 * m
    tab: list[list[Fraction]] = []
    for i in range(m):
        coeffs = [Fraction(v) for v in rows[i]]
        b = Fraction(rhs[i])
        surplus = -one
        if b < 0:
            coeffs = [-v for v in coeffs]
            b = -b
            surplus = one
        line = coeffs + [zero] * (2 * m) + [b]
        line[n + i] = surplus
        line[n + m + i] = one
        tab.append(line)
    basis = [n + m + i for i in range(m)]

    def pivot(row: int, col: int) -> None:
        piv = tab[row][col]
        tab[row] = [v / piv for v in tab[row]]
        for r in range(m):
            if r != row and tab[r][col] != 0:
                factor = tab[r][col]
                tab[r] = [v - factor * p for v, p in zip(tab[r], tab[row])]
        basis[row] = col

    def optimize(cost_of: list[Fraction], usable: int) -> None:
        # usable = number of leading columns eligible to enter
        while True:
            dual = [cost_of[basis[i]] for i in range(m)]
            entering = -1
            for j in range(usable):
                if j in basis:
                    continue
                reduced = cost_of[j] - sum(
                    (dual[i] * tab[i][j] for i in range(m)), zero)
                if reduced < 0:
                    entering = j
                    break  # Bland: first eligible index
            if entering < 0:
                return
            leaving = -1
            best_ratio: Optional[Fraction] = None
            for i in range(m):
                coef = tab[i][entering]
                if coef > 0:
                    ratio = tab[i][width] / coef
                    if (best_ratio is None or ratio < best_ratio
                            or (ratio == best_ratio and basis[i] < basis[leaving])):
                        best_ratio = ratio
                        leaving = i
            if leaving < 0:
                raise ArithmeticError("unbounded program despite nonnegative costs")
            pivot(leaving, entering)

    # Phase 1: minimize the artificial total.
    phase1 = [zero] * (n + m) + [one] * m
    optimize(phase1, width)
    infeasibility = sum((phase1[basis[i]] * tab[i][width] for i in range(m)), zero)
    if infeasibility > 0:
        return None

    # Drive leftover artificials out of the basis (they sit at value 0).
    for i in range(m):
        if basis[i] >= n + m:
            replacement = next(
                (j for j in range(n + m) if tab[i][j] != 0), None)
            if replacement is not None:
                pivot(i, replacement)
    # Rows still basic in an artificial are all-zero over real columns:
    # redundant equalities, safe to drop.
    keep = [i for i in range(m) if basis[i] < n + m]
    if len(keep) != m:
        tab = [tab[i] for i in keep]
        basis = [basis[i] for i in keep]
        m = len(keep)

    phase2 = list(costs) + [zero] * (2 * len(rows))
    optimize(phase2, n + len(rows))

    x = [zero] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tab[i][width]
    value = sum((c * v for c, v in zip(costs, x)), zero)
    return value, tuple(x)
