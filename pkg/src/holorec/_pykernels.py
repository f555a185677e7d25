"""Pure-Python reference kernels for dense coefficient lists.

Lists hold coefficients lowest degree first and work for any exact number
type supporting ``+ - * /`` (ints, Fractions, Quad).  The compiled twin in
``_ckernels.pyx`` must agree with these functions element for element.
"""

BACKEND = "python"


def trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def sub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return trim(out)


def scale(a, c):
    if not c:
        return []
    return trim([x * c for x in a])


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def divmod_(a, b):
    """Quotient and remainder of long division; ``b`` must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(r)
    inv = 1 / b[-1]
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * b[j]
    return trim(q), trim(r[:db])


def taylor_shift(a, k):
    """Coefficients of ``p(x + k)``."""
    out = list(a)
    n = len(out)
    if not k or n < 2:
        return out
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] = out[j] + k * out[j + 1]
    return out


def horner(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def roots_mod_p(a, p):
    """All residues ``r`` in ``[0, p)`` with ``sum a[i] r**i == 0 (mod p)``."""
    red = [c % p for c in a]
    roots = []
    for r in range(p):
        acc = 0
        for c in reversed(red):
            acc = (acc * r + c) % p
        if acc == 0:
            roots.append(r)
    return roots
