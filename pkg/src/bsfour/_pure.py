"""Pure-Python arithmetic kernel.

Elements of B(k) = <a, b | a b a^-1 = b^k> in normal form b^x a^t are
plain tuples (num, pow, t) meaning x = num / |k|^pow, t the a-exponent.
Group-ring elements are dicts mapping such tuples to nonzero ints.
The compiled kernel in _speedups.pyx implements the same functions;
keep the two in sync.

Reduced means pow == 0 or |k| does not divide num, so every element has
exactly one representation.  For k = 0 the generator b dies and x is
forced to 0; for |k| = 1 the exponent x is an integer and pow is 0.
"""


def bs_reduce(num, pow, t, k):
    kq = -k if k < 0 else k
    if kq == 0 or num == 0:
        return (0, 0, t)
    if kq == 1:
        return (num, 0, t)
    while pow > 0 and num % kq == 0:
        num //= kq
        pow -= 1
    return (num, pow, t)


def _scale(num, pow, e, k):
    # k^e * (num / |k|^pow), reduced.  Input must be reduced, k nonzero.
    if num == 0:
        return (0, 0)
    kq = -k if k < 0 else k
    if k < 0 and e & 1:
        num = -num
    if e >= 0:
        if e >= pow:
            return (num * kq ** (e - pow), 0)
        return (num, pow - e)
    pow -= e
    if kq == 1:
        return (num, 0)
    while pow > 0 and num % kq == 0:
        num //= kq
        pow -= 1
    return (num, pow)


def bs_mul(g, h, k):
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
        return bs_reduce(n1 + n2 * kq ** (p1 - p2), p1, t, k)
    return bs_reduce(n1 * kq ** (p2 - p1) + n2, p2, t, k)


def bs_inv(g, k):
    n, p, t = g
    if k == 0 or n == 0:
        return (0, 0, -t)
    n, p = _scale(-n, p, -t, k)
    return (n, p, -t)


def eval_word(word, k):
    g = (0, 0, 0)
    for ch in word:
        if ch == "a":
            g = (g[0], g[1], g[2] + 1)
        elif ch == "A":
            g = (g[0], g[1], g[2] - 1)
        elif ch == "b":
            g = bs_mul(g, (1, 0, 0), k)
        else:
            g = bs_mul(g, (-1, 0, 0), k)
    return g


def ring_mul(p, q, k):
    return ring_addmul({}, p, q, k)


def ring_addmul(out, p, q, k):
    # out += p * q in place; the accumulator keeps matrix products
    # from allocating one dict per partial sum.
    for g1, c1 in p.items():
        for g2, c2 in q.items():
            key = bs_mul(g1, g2, k)
            c = out.get(key)
            if c is None:
                out[key] = c1 * c2
            else:
                c += c1 * c2
                if c:
                    out[key] = c
                else:
                    del out[key]
    return out


def ring_involute(p, k):
    return {bs_inv(g, k): c for g, c in p.items()}
