"""Exact Gaussian elimination over Q."""

from fractions import Fraction


def solve_rational(rows, rhs):
    """One solution of ``rows @ c = rhs`` over Q, or None when inconsistent.

    Free variables are set to zero.  Inputs are not modified.
    """
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    if not m:
        return None
    n_cols = len(m[0]) - 1
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][-1] != 0:
            return None
    sol = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        sol[c] = m[i][-1]
    return sol
