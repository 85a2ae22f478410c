"""Exact linear programming over the rationals.

A small dense two-phase simplex with Bland's rule, meant for the tiny
feasibility and separation problems that show up elsewhere in the library
(quasihomogeneity detection, grading detection, separating functionals,
relaxations inside the integer search).  Everything is a Fraction; there is
no rounding and no cycling.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_F0 = Fraction(0)
_F1 = Fraction(1)


def _pivot(rows, basis, r, c):
    piv = rows[r][c]
    rows[r] = [v / piv for v in rows[r]]
    prow = rows[r]
    for i in range(len(rows)):
        if i == r:
            continue
        f = rows[i][c]
        if f:
            rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
    basis[r] = c


def _run_simplex(rows, basis, cost, ncols):
    """Minimize cost over the tableau in place.  Bland's rule throughout."""
    while True:
        cb = [cost[b] for b in basis]
        enter = -1
        for j in range(ncols):
            red = cost[j]
            for i in range(len(rows)):
                if rows[i][j]:
                    red -= cb[i] * rows[i][j]
            if red < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best = None
        for i in range(len(rows)):
            coef = rows[i][enter]
            if coef > 0:
                ratio = rows[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return UNBOUNDED
        _pivot(rows, basis, leave, enter)


def solve_standard(c, A, b):
    """Minimize c.x subject to A x = b, x >= 0.

    Returns (status, x, value) with exact rational entries; x and value are
    None unless status is OPTIMAL.
    """
    m = len(A)
    n = len(c)
    c = [Fraction(v) for v in c]
    rows = []
    rhs = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        rows.append(row)
        rhs.append(bi)

    # Phase 1: artificial variables n .. n+m-1.
    tab = [rows[i] + [(_F1 if j == i else _F0) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost1 = [_F0] * n + [_F1] * m
    _run_simplex(tab, basis, cost1, n + m)
    if sum((tab[i][-1] for i in range(len(tab)) if basis[i] >= n), _F0) > 0:
        return INFEASIBLE, None, None

    # Drive remaining artificials out of the basis; drop redundant rows.
    keep = []
    for i in range(len(tab)):
        if basis[i] >= n:
            for j in range(n):
                if tab[i][j]:
                    _pivot(tab, basis, i, j)
                    break
            else:
                continue  # all-zero row: redundant constraint
        keep.append(i)
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    status = _run_simplex(tab, basis, c, n)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [_F0] * n
    for i, bi in enumerate(basis):
        x[bi] = tab[i][-1]
    value = sum((c[j] * x[j] for j in range(n)), _F0)
    return OPTIMAL, x, value


def solve(nvars, *, objective=None, maximize=False, eq=(), ge=(), le=(),
          lower=None, free=()):
    """General-form exact LP.

    Variables are x_0 .. x_{nvars-1}, each bounded below by 0 unless it
    appears in `free` (unbounded) or in `lower` (mapping index -> bound).
    `eq`, `ge`, `le` are iterables of (coefficients, rhs).  With no
    objective this is a pure feasibility problem.

    Returns (status, x, value).
    """
    lower = dict(lower or {})
    free = set(free)
    # Column layout per original variable.
    col_of = {}
    shift = {}
    ncols = 0
    for i in range(nvars):
        if i in free:
            col_of[i] = (ncols, ncols + 1)  # x = plus - minus
            ncols += 2
        else:
            col_of[i] = (ncols, None)  # x = lower + u, u >= 0
            shift[i] = Fraction(lower.get(i, 0))
            ncols += 1

    A, b = [], []

    def add_row(coeffs, rhs, slack_sign):
        nonlocal ncols
        row = [_F0] * ncols
        rhs = Fraction(rhs)
        for i, cf in enumerate(coeffs):
            cf = Fraction(cf)
            if not cf:
                continue
            pos, neg = col_of[i]
            row[pos] += cf
            if neg is not None:
                row[neg] -= cf
            else:
                rhs -= cf * shift[i]
        if slack_sign:
            for existing in A:
                existing.append(_F0)
            row.append(Fraction(slack_sign))
            ncols += 1
        A.append(row)
        b.append(rhs)

    for coeffs, rhs in eq:
        add_row(coeffs, rhs, 0)
    for coeffs, rhs in ge:
        add_row(coeffs, rhs, -1)
    for coeffs, rhs in le:
        add_row(coeffs, rhs, +1)
    # Pad rows added before later slack columns.
    width = ncols
    A = [row + [_F0] * (width - len(row)) for row in A]

    cost = [_F0] * width
    if objective is not None:
        sign = -1 if maximize else 1
        for i, cf in enumerate(objective):
            cf = Fraction(cf) * sign
            if not cf:
                continue
            pos, neg = col_of[i]
            cost[pos] += cf
            if neg is not None:
                cost[neg] -= cf

    status, xs, value = solve_standard(cost, A, b)
    if status != OPTIMAL:
        return status, None, None
    x = []
    for i in range(nvars):
        pos, neg = col_of[i]
        if neg is not None:
            x.append(xs[pos] - xs[neg])
        else:
            x.append(xs[pos] + shift[i])
    if objective is None:
        val = None
    else:
        val = sum((Fraction(objective[i]) * x[i] for i in range(nvars)), _F0)
    return OPTIMAL, x, val


def feasible(nvars, **kwargs):
    """Feasibility shortcut: returns a point or None."""
    status, x, _ = solve(nvars, **kwargs)
    return x if status == OPTIMAL else None
