"""Small exact linear algebra used by the cocycle certificates.

Everything is integer or Fraction arithmetic on tiny matrices: RREF
over Q with left-nullspace extraction, Smith normal form over Z with
both transforms, and feasibility of A x = b over Z, Q and Z/m (the
latter through the integer lift [A | m I]).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (copy) and pivot column indices."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right nullspace over Q, deterministic order."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def left_nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of {y : y^T A = 0}, each vector scaled to leading coefficient 1."""
    nrows = len(rows)
    if nrows == 0:
        return []
    ncols = len(rows[0])
    transpose = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
    basis = nullspace(transpose)
    normalized = []
    for vec in basis:
        lead = next((x for x in vec if x != 0), None)
        if lead is None:
            continue
        normalized.append([x / lead for x in vec])
    return normalized


def solve_rational(rows, rhs) -> tuple[bool, list[Fraction] | None]:
    """Feasibility and one solution of A x = b over Q."""
    if not rows:
        return True, []
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    ncols = len(rows[0])
    if ncols in pivots:
        return False, None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return True, x


def det_int(rows: list[list[int]]) -> int:
    """Determinant of an integer matrix (Bareiss, fraction-free)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(matrix: list[list[int]]):
    """U, S, V with U A V = S diagonal, d_i | d_{i+1}; U, V unimodular."""
    a = [list(map(int, row)) for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def row_op(i, j, alpha, beta, gamma, delta):
        # (row_i, row_j) <- (alpha row_i + beta row_j, gamma row_i + delta row_j)
        for k in range(ncols):
            a[i][k], a[j][k] = alpha * a[i][k] + beta * a[j][k], gamma * a[i][k] + delta * a[j][k]
        for k in range(nrows):
            u[i][k], u[j][k] = alpha * u[i][k] + beta * u[j][k], gamma * u[i][k] + delta * u[j][k]

    def col_op(i, j, alpha, beta, gamma, delta):
        for k in range(nrows):
            a[k][i], a[k][j] = alpha * a[k][i] + beta * a[k][j], gamma * a[k][i] + delta * a[k][j]
        for k in range(ncols):
            v[k][i], v[k][j] = alpha * v[k][i] + beta * v[k][j], gamma * v[k][i] + delta * v[k][j]

    def ext_gcd(x, y):
        if y == 0:
            return (x, 1, 0) if x >= 0 else (-x, -1, 0)
        g, p, q = ext_gcd(y, x % y)
        return g, q, p - (x // y) * q

    def clear_at(t: int):
        """Row/column steps until (t, t) is the only nonzero in its row and column.

        Plain elimination when the pivot divides the entry (leaves the pivot
        row/column untouched); a gcd step otherwise, which strictly shrinks
        |a[t][t]| and so bounds the number of passes.
        """
        while True:
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    if a[i][t] % a[t][t] == 0:
                        row_op(t, i, 1, 0, -(a[i][t] // a[t][t]), 1)
                    else:
                        g, p, q = ext_gcd(a[t][t], a[i][t])
                        row_op(t, i, p, q, -(a[i][t] // g), a[t][t] // g)
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    if a[t][j] % a[t][t] == 0:
                        col_op(t, j, 1, 0, -(a[t][j] // a[t][t]), 1)
                    else:
                        g, p, q = ext_gcd(a[t][t], a[t][j])
                        col_op(t, j, p, q, -(a[t][j] // g), a[t][t] // g)
            if all(a[i][t] == 0 for i in range(t + 1, nrows)) and all(
                a[t][j] == 0 for j in range(t + 1, ncols)
            ):
                return

    t = 0
    while t < min(nrows, ncols):
        pivot = next(
            ((i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j] != 0),
            None,
        )
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            row_op(t, pi, 0, 1, 1, 0)
        if pj != t:
            col_op(t, pj, 0, 1, 1, 0)
        clear_at(t)
        t += 1

    # enforce the divisibility chain d_i | d_{i+1}
    size = min(nrows, ncols)
    changed = True
    while changed:
        changed = False
        for i in range(size - 1):
            x, y = a[i][i], a[i + 1][i + 1]
            if x != 0 and y % x != 0:
                row_op(i, i + 1, 1, 1, 0, 1)  # row_i += row_{i+1}
                clear_at(i)
                changed = True
    for i in range(size):
        if a[i][i] < 0:
            for k in range(ncols):
                a[i][k] = -a[i][k]
            for k in range(nrows):
                u[i][k] = -u[i][k]
    return u, a, v


def solve_integer(rows: list[list[int]], rhs: list[int]) -> bool:
    """Whether A x = b has an integer solution (Smith normal form test)."""
    if not rows:
        return True
    u, s, _ = smith_normal_form(rows)
    nrows = len(rows)
    ncols = len(rows[0])
    ub = [sum(u[i][k] * rhs[k] for k in range(nrows)) for i in range(nrows)]
    rank = min(nrows, ncols)
    for i in range(nrows):
        d = s[i][i] if i < rank else 0
        if d == 0:
            if ub[i] != 0:
                return False
        elif ub[i] % d != 0:
            return False
    return True


def solve_mod(rows: list[list[int]], rhs: list[int], modulus: int) -> bool:
    """Whether A x = b is solvable mod m, via the integer lift [A | m I]."""
    if not rows:
        return True
    nrows = len(rows)
    lifted = [list(map(int, row)) + [modulus if k == i else 0 for k in range(nrows)]
              for i, row in enumerate(rows)]
    return solve_integer(lifted, [int(b) for b in rhs])
