# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``; same signatures, same results."""

BACKEND = "cython"


cpdef list trim(object a):
    cdef list out = list(a)
    while out and not out[len(out) - 1]:
        out.pop()
    return out


cpdef list add(object a_, object b_):
    cdef Py_ssize_t i
    cdef list a = list(a_), b = list(b_)
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return trim(out)


cpdef list sub(object a_, object b_):
    cdef list a = list(a_), b = list(b_)
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    cdef list out = list(a)
    if lb > la:
        out.extend([0] * (lb - la))
    for i in range(lb):
        out[i] = out[i] - b[i]
    return trim(out)


cpdef list scale(object a, object c):
    if not c:
        return []
    return trim([x * c for x in a])


cpdef list mul(object a_, object b_):
    cdef list a = list(a_), b = list(b_)
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    cdef object x
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if not x:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + x * b[j]
    return trim(out)


cpdef tuple divmod_(object a, object b_):
    cdef list b = list(b_)
    cdef Py_ssize_t k, j, db, lr
    cdef object c, inv
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef list r = list(a)
    db = len(b) - 1
    lr = len(r)
    if lr - 1 < db:
        return [], trim(r)
    inv = 1 / b[db]
    cdef list q = [0] * (lr - db)
    for k in range(lr - 1 - db, -1, -1):
        c = r[k + db] * inv
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * b[j]
    return trim(q), trim(r[:db])


cpdef list taylor_shift(object a, object k):
    cdef list out = list(a)
    cdef Py_ssize_t n = len(out), i, j
    if not k or n < 2:
        return out
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] = out[j] + k * out[j + 1]
    return out


cpdef object horner(object a_, object x):
    cdef list a = list(a_)
    cdef object acc = 0
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc


cpdef list roots_mod_p(object a, long long p):
    cdef Py_ssize_t n = len(a), i
    cdef long long r, acc
    cdef long long[:] red
    import array
    buf = array.array("q", [int(c % p) for c in a] or [0])
    red = buf
    cdef list roots = []
    for r in range(p):
        acc = 0
        for i in range(n - 1, -1, -1):
            acc = (acc * r + red[i]) % p
        if acc == 0:
            roots.append(r)
    return roots
