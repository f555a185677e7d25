"""Gauss-Jordan elimination over any exact field.

Entries only need ``+ - * /`` and truthiness, so the same code serves
Fractions, quadratic-field elements and rational functions.  Pivots are
chosen in the lowest available column, top-most nonzero row first, which
makes the reduced form (and hence every nullspace basis) reproducible.
All-rational matrices take a fraction-free integer path instead.
"""

from fractions import Fraction
from math import gcd, lcm


def _integer_rows(m):
    out = []
    for row in m:
        den = 1
        for x in row:
            if type(x) is Fraction:
                den = lcm(den, x.denominator)
            elif type(x) is not int:
                return None
        out.append([int(x * den) for x in row])
    return out


def _primitive(row):
    g = gcd(*row)
    return [x // g for x in row] if g > 1 else row


def _rref_int(m, ncols):
    pivots = []
    r = 0
    for col in range(ncols):
        if r >= len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r] = _primitive(m[r])
        a = pr[col]
        for i in range(len(m)):
            b = m[i][col]
            if i != r and b:
                m[i] = _primitive([a * x - b * y for x, y in zip(m[i], pr)])
        pivots.append(col)
        r += 1
    out = []
    for i, row in enumerate(m):
        if i < len(pivots):
            a = row[pivots[i]]
            out.append([Fraction(x, a) if x else 0 for x in row])
        else:
            out.append([0] * len(row))
    return out, pivots


def rref(rows, ncols=None):
    """Reduced row echelon form; returns ``(matrix, pivot_columns)``."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    ints = _integer_rows(m)
    if ints is not None:
        return _rref_int(ints, ncols)
    pivots = []
    r = 0
    for col in range(ncols):
        if r >= len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return m, pivots


def nullspace(rows, ncols, zero=0, one=1):
    """Basis of ``{x : rows @ x == 0}``, each vector's first nonzero entry scaled to 1."""
    if not rows:
        return [[one if j == k else zero for j in range(ncols)] for k in range(ncols)]
    m, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [zero] * ncols
        v[fcol] = one
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fcol]
        lead = next(x for x in v if x)
        if lead != one:
            inv = 1 / lead
            v = [x * inv for x in v]
        basis.append(v)
    return basis


def solve(rows, rhs, zero=0):
    """One solution of ``rows @ x == rhs`` with free variables set to zero, or None."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = m[i][ncols]
    return x
