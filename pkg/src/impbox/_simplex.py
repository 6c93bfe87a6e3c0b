"""Exact two-phase simplex over rationals.

Small dense solver used by the credal oracle: a handful of variables,
tens of rows, all arithmetic in ``Fraction`` so optima are exact.
Bland's rule is used throughout, which rules out cycling.
"""

from __future__ import annotations

from fractions import Fraction


class Infeasible(Exception):
    """The constraint system has no solution."""


class Unbounded(Exception):
    """The objective is unbounded below on the feasible region."""


def solve_min(c, a_ub, b_ub, a_eq, b_eq):
    """Minimize c.x subject to a_ub.x <= b_ub, a_eq.x = b_eq, x >= 0.

    All right-hand sides must be non-negative (the callers guarantee
    this), so the slacks of the <= rows form a partial starting basis
    and only the equality rows need artificial variables.

    Returns ``(value, x)`` with exact rationals.
    """
    n = len(c)
    c = [Fraction(v) for v in c]
    rows = []
    rhs = []
    for a, b in zip(a_ub, b_ub):
        if b < 0:
            raise ValueError("upper-bound rows must have non-negative rhs")
        rows.append([Fraction(v) for v in a])
        rhs.append(Fraction(b))
    for a, b in zip(a_eq, b_eq):
        if b < 0:
            raise ValueError("equality rows must have non-negative rhs")
        rows.append([Fraction(v) for v in a])
        rhs.append(Fraction(b))
    n_ub = len(a_ub)
    n_eq = len(a_eq)
    m = n_ub + n_eq
    n_cols = n + n_ub + n_eq

    # tableau rows: x columns | ub slacks | eq artificials, then rhs
    tab = []
    for i in range(m):
        row = rows[i] + [Fraction(0)] * (n_ub + n_eq)
        if i < n_ub:
            row[n + i] = Fraction(1)
        else:
            row[n + n_ub + (i - n_ub)] = Fraction(1)
        row.append(rhs[i])
        tab.append(row)
    basis = [n + i if i < n_ub else n + n_ub + (i - n_ub) for i in range(m)]

    def pivot(zrow, r, j):
        piv = tab[r][j]
        tab[r] = [v / piv for v in tab[r]]
        for i in range(m):
            if i != r and tab[i][j] != 0:
                f = tab[i][j]
                tab[i] = [v - f * p for v, p in zip(tab[i], tab[r])]
        if zrow[j] != 0:
            f = zrow[j]
            for k in range(len(zrow)):
                zrow[k] -= f * tab[r][k]
        basis[r] = j

    def run(zrow, allowed):
        # zrow[j] = c_B B^-1 A_j - c_j; entering while some zrow[j] > 0
        while True:
            enter = -1
            for j in range(n_cols):
                if allowed[j] and basis_pos[j] is None and zrow[j] > 0:
                    enter = j
                    break
            if enter < 0:
                return
            leave = -1
            best = None
            for i in range(m):
                if tab[i][enter] > 0:
                    ratio = tab[i][-1] / tab[i][enter]
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                raise Unbounded()
            basis_pos[basis[leave]] = None
            pivot(zrow, leave, enter)
            basis_pos[enter] = leave

    basis_pos = [None] * n_cols
    for i, j in enumerate(basis):
        basis_pos[j] = i

    # phase 1: minimize the sum of artificials
    if n_eq:
        art_start = n + n_ub
        zrow = [Fraction(0)] * (n_cols + 1)
        for i in range(n_ub, m):
            for k in range(n_cols + 1):
                zrow[k] += tab[i][k]
        for j in range(art_start, n_cols):
            zrow[j] -= 1
        allowed = [True] * n_cols
        run(zrow, allowed)
        if zrow[-1] != 0:
            raise Infeasible()
        # drive any degenerate basic artificial out, or drop its row
        drop = []
        for i in range(m):
            if basis[i] >= art_start:
                for j in range(art_start):
                    if tab[i][j] != 0:
                        basis_pos[basis[i]] = None
                        pivot([Fraction(0)] * (n_cols + 1), i, j)
                        basis_pos[j] = i
                        break
                else:
                    drop.append(i)
        for i in reversed(drop):
            basis_pos[basis[i]] = None
            del tab[i], basis[i]
            for j, pos in enumerate(basis_pos):
                if pos is not None and pos > i:
                    basis_pos[j] = pos - 1
            m -= 1
    else:
        art_start = n_cols

    # phase 2: minimize the real objective over non-artificial columns
    cost = c + [Fraction(0)] * (n_cols - n)
    zrow = [Fraction(0)] * (n_cols + 1)
    for i in range(m):
        cb = cost[basis[i]]
        if cb != 0:
            for k in range(n_cols + 1):
                zrow[k] += cb * tab[i][k]
    for j in range(n_cols):
        zrow[j] -= cost[j]
    allowed = [j < art_start for j in range(n_cols)]
    run(zrow, allowed)

    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tab[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return value, x
