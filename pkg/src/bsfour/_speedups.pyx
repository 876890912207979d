# cython: language_level=3
"""Compiled arithmetic kernel.

Same contract as _pure.py; keep the two in sync.  Integers stay Python
objects (coefficients and exponents are arbitrary precision), the win is
C-level calls and loop overhead in the convolution and word evaluation.
"""


def bs_reduce(num, pow, t, k):
    return _reduce3(num, pow, t, k)


cdef inline tuple _reduce3(object num, object pow, object t, object k):
    cdef object kq = -k if k < 0 else k
    if kq == 0 or num == 0:
        return (0, 0, t)
    if kq == 1:
        return (num, 0, t)
    while pow > 0 and num % kq == 0:
        num //= kq
        pow -= 1
    return (num, pow, t)


cdef inline tuple _scale(object num, object pow, object e, object k):
    cdef object kq
    if num == 0:
        return (0, 0)
    kq = -k if k < 0 else k
    if k < 0 and e & 1:
        num = -num
    if e >= 0:
        if e >= pow:
            return (num * kq ** (e - pow), 0)
        return (num, pow - e)
    pow = pow - e
    if kq == 1:
        return (num, 0)
    while pow > 0 and num % kq == 0:
        num //= kq
        pow -= 1
    return (num, pow)


cdef inline tuple _mul(tuple g, tuple h, object k):
    cdef object n1, p1, t1, n2, p2, t2, t, kq
    n1, p1, t1 = g
    n2, p2, t2 = h
    t = t1 + t2
    if k == 0:
        return (0, 0, t)
    if n2 != 0:
        n2, p2 = _scale(n2, p2, t1, k)
    if n1 == 0:
        return (n2, p2, t)
    if n2 == 0:
        return (n1, p1, t)
    kq = -k if k < 0 else k
    if p1 >= p2:
        return _reduce3(n1 + n2 * kq ** (p1 - p2), p1, t, k)
    return _reduce3(n1 * kq ** (p2 - p1) + n2, p2, t, k)


def bs_mul(g, h, k):
    return _mul(g, h, k)


cdef inline tuple _inv(tuple g, object k):
    cdef object n, p, t
    n, p, t = g
    if k == 0 or n == 0:
        return (0, 0, -t)
    n, p = _scale(-n, p, -t, k)
    return (n, p, -t)


def bs_inv(g, k):
    return _inv(g, k)


def eval_word(word, k):
    cdef tuple g = (0, 0, 0)
    cdef Py_UCS4 ch
    for ch in <str> word:
        if ch == u'a':
            g = (g[0], g[1], g[2] + 1)
        elif ch == u'A':
            g = (g[0], g[1], g[2] - 1)
        elif ch == u'b':
            g = _mul(g, (1, 0, 0), k)
        else:
            g = _mul(g, (-1, 0, 0), k)
    return g


def ring_mul(p, q, k):
    return ring_addmul({}, p, q, k)


def ring_addmul(out, p, q, k):
    # out += p * q in place, as in _pure.ring_addmul.
    cdef dict acc = <dict> out
    cdef tuple key
    cdef object c
    for g1, c1 in (<dict> p).items():
        for g2, c2 in (<dict> q).items():
            key = _mul(<tuple> g1, <tuple> g2, k)
            c = acc.get(key)
            if c is None:
                acc[key] = c1 * c2
            else:
                c = c + c1 * c2
                if c:
                    acc[key] = c
                else:
                    del acc[key]
    return acc


def ring_involute(p, k):
    cdef dict out = {}
    for g, c in (<dict> p).items():
        out[_inv(<tuple> g, k)] = c
    return out
