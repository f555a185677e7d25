"""Least-order recurrence annihilating a list of hypergeometric terms.

For terms with ratios ``r_1..r_d`` the recurrence is written as
``a(n) + sum_j v_j a(n+j) = 0``.  Dividing by ``a(n+1)`` turns the
condition for term ``i`` into ``sum_j v_j prod_{k=1}^{j-1} r_i(n+k) = -1/r_i(n)``,
a square linear system over Q(n) (or Q(sqrt(D))(n)).
"""

from .exactmath import linalg
from .exactmath.field import to_scalar
from .exactmath.poly import RatFun
from .hypterm import HypTerm
from .recurrence import normalize


def _as_ratio(item):
    if isinstance(item, HypTerm):
        c, rho = item.ratio()
        return rho * c
    if isinstance(item, tuple):
        c, rho = item
        return RatFun._lift(rho) * to_scalar(c)
    return RatFun._lift(item)


def sum_hyper_re(ratios, var="n"):
    """Recurrence of order ``len(ratios)`` satisfied by every given ratio.

    Items may be ``(constant, RatFun)`` pairs, bare ``RatFun`` ratios or
    :class:`HypTerm` objects.
    """
    rs = [_as_ratio(x) for x in ratios]
    if not rs:
        raise ValueError("need at least one ratio")
    if any(not r for r in rs):
        raise ValueError("ratios must be nonzero")
    if len(set(rs)) != len(rs):
        raise ValueError("ratios must be pairwise distinct")
    d = len(rs)
    zero, one = RatFun.const(0), RatFun.const(1)
    rows, rhs = [], []
    for r in rs:
        row, acc = [], one
        for j in range(1, d + 1):
            row.append(acc)
            acc = acc * r.shift(j)
        rows.append(row)
        rhs.append(-r.inverse())
    v = linalg.solve(rows, rhs, zero=zero)
    if v is None:
        raise ValueError("inconsistent system; ratios do not define a recurrence")
    return normalize([one] + v, var=var)
