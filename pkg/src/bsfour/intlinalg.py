"""Exact integer linear algebra: Smith normal form with transforms,
finitely generated abelian groups, homology of short complexes, and
signatures of symmetric matrices.

Everything is arbitrary-precision; signatures go through Fraction
congruence diagonalization, never floating point.  Matrices are plain
lists of rows.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ChainComplexError, SchemaError


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_mul(A, B):
    if not A or not B:
        return []
    w = len(B[0])
    return [[sum(row[p] * B[p][j] for p in range(len(B))) for j in range(w)]
            for row in A]


def _swap_cols(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(A):
    """U, D, V with U A V = D diagonal, U and V unimodular, the diagonal
    non-negative and each entry dividing the next."""
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("ragged matrix")
    D = [list(row) for row in A]
    U = _identity(m)
    V = _identity(n)
    _diagonalize(D, U, V, 0)
    _fix_divisor_chain(D, U, V)
    return U, D, V


def _diagonalize(D, U, V, start):
    m = len(D)
    n = len(D[0]) if m else 0
    for i in range(start, min(m, n)):
        while True:
            best = None
            for r in range(i, m):
                for c in range(i, n):
                    v = D[r][c]
                    if v and (best is None
                              or abs(v) < abs(D[best[0]][best[1]])):
                        best = (r, c)
            if best is None:
                return
            r, c = best
            if r != i:
                D[i], D[r] = D[r], D[i]
                U[i], U[r] = U[r], U[i]
            if c != i:
                _swap_cols(D, i, c)
                _swap_cols(V, i, c)
            if D[i][i] < 0:
                D[i] = [-x for x in D[i]]
                U[i] = [-x for x in U[i]]
            p = D[i][i]
            clean = True
            for r in range(i + 1, m):
                q = D[r][i] // p
                if q:
                    D[r] = [x - q * y for x, y in zip(D[r], D[i])]
                    U[r] = [x - q * y for x, y in zip(U[r], U[i])]
                if D[r][i]:
                    clean = False
            for c in range(i + 1, n):
                q = D[i][c] // p
                if q:
                    for row in D:
                        row[c] -= q * row[i]
                    for row in V:
                        row[c] -= q * row[i]
                if D[i][c]:
                    clean = False
            if clean:
                break


def _fix_divisor_chain(D, U, V):
    m = len(D)
    n = len(D[0]) if m else 0
    r = min(m, n)
    while True:
        for i in range(r - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if a and b % a:
                # fold column i+1 into column i and re-eliminate
                for row in D:
                    row[i] += row[i + 1]
                for row in V:
                    row[i] += row[i + 1]
                _diagonalize(D, U, V, i)
                break
        else:
            return


def invariant_factors(A):
    """Nonzero diagonal of the Smith form."""
    if not A:
        return []
    _, D, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(A), len(A[0]))) if D[i][i]]


def int_det(A):
    """Fraction-free Bareiss determinant of an integer matrix."""
    n = len(A)
    if n == 0:
        return 1
    if any(len(row) != n for row in A):
        raise ValueError("square matrix required")
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if M[i][i] == 0:
            p = next((r for r in range(i + 1, n) if M[r][i]), None)
            if p is None:
                return 0
            M[i], M[p] = M[p], M[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                M[r][c] = (M[r][c] * M[i][i] - M[r][i] * M[i][c]) // prev
            M[r][i] = 0
        prev = M[i][i]
    return sign * M[n - 1][n - 1]


def rational_inverse(A):
    """Exact inverse of a square matrix as Fractions, or None if
    singular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j))
                                       for j in range(n)]
         for i, row in enumerate(A)]
    for i in range(n):
        p = next((r for r in range(i, n) if M[r][i]), None)
        if p is None:
            return None
        M[i], M[p] = M[p], M[i]
        d = M[i][i]
        M[i] = [x / d for x in M[i]]
        for r in range(n):
            if r != i and M[r][i]:
                f = M[r][i]
                M[r] = [x - f * y for x, y in zip(M[r], M[i])]
    return [row[n:] for row in M]


def _rank_mod_p(A, p, width):
    M = [[x % p for x in row] for row in A]
    rank = 0
    for col in range(width):
        piv = next((r for r in range(rank, len(M)) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], -1, p)
        M[rank] = [(x * inv) % p for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][col]:
                f = M[r][col]
                M[r] = [(x - f * y) % p for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def signature(S):
    """Signature of a symmetric matrix, by exact congruence
    diagonalization.  A pair of zero-diagonal rows coupled off-diagonal
    is a hyperbolic plane and contributes nothing."""
    n = len(S)
    for i, row in enumerate(S):
        if len(row) != n:
            raise ValueError("square matrix required")
        for j in range(i):
            if row[j] != S[j][i]:
                raise ValueError("symmetric matrix required")
    M = [[Fraction(x) for x in row] for row in S]
    act = list(range(n))
    sig = 0
    while act:
        piv = next((i for i in act if M[i][i]), None)
        if piv is not None:
            d = M[piv][piv]
            sig += 1 if d > 0 else -1
            rest = [r for r in act if r != piv]
            for r in rest:
                f = M[r][piv] / d
                if f:
                    for c in rest:
                        M[r][c] -= f * M[piv][c]
            act = rest
            continue
        pair = next(((i, j) for i in act for j in act if i < j and M[i][j]),
                    None)
        if pair is None:
            break
        i, j = pair
        c = M[i][j]
        rest = [r for r in act if r != i and r != j]
        alpha = {r: -M[r][j] / c for r in rest}
        beta = {r: -M[r][i] / c for r in rest}
        old = {r: (M[r][i], M[r][j]) for r in rest}
        rows = {r: dict((s, M[r][s]) for s in rest) for r in rest}
        for r in rest:
            for s in rest:
                M[r][s] = (rows[r][s]
                           + alpha[r] * M[i][s] + beta[r] * M[j][s]
                           + alpha[s] * old[r][0] + beta[s] * old[r][1]
                           + (alpha[r] * beta[s] + beta[r] * alpha[s]) * c)
        act = rest
    return sig


def random_unimodular(rng, n):
    """Product of random elementary matrices; determinant is +-1."""
    T = _identity(n)
    for _ in range(3 * n + 2):
        kind = rng.randrange(6)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and n > 1:
            if i != j:
                T[i], T[j] = T[j], T[i]
        elif kind == 1:
            T[i] = [-x for x in T[i]]
        else:
            if i == j:
                continue
            q = rng.choice((-2, -1, 1, 2))
            T[i] = [x + q * y for x, y in zip(T[i], T[j])]
    return T


_E8_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7))


def e8_matrix():
    """Gram matrix of the positive definite even unimodular rank-8
    lattice, as the Cartan matrix of the T(2,3,5) diagram."""
    E = [[0] * 8 for _ in range(8)]
    for i in range(8):
        E[i][i] = 2
    for i, j in _E8_EDGES:
        E[i][j] = E[j][i] = -1
    return E


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/t1 + ... + Z/tr with t1 | t2 | ... and ti >= 2."""

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        prev = None
        for t in self.torsion:
            if t < 2 or (prev is not None and t % prev):
                raise ValueError("torsion must be a divisor chain of"
                                 " integers >= 2")
            prev = t

    @classmethod
    def trivial(cls):
        return cls(0, ())

    @classmethod
    def free(cls, r):
        return cls(r, ())

    @classmethod
    def cyclic(cls, n):
        """Z/n, with Z/0 read as Z and Z/1 as trivial."""
        return cls.from_invariant_factors([n])

    @classmethod
    def elementary(cls, p, dim):
        return cls.from_invariant_factors([p] * dim)

    @classmethod
    def from_invariant_factors(cls, factors, free_rank=0):
        """Canonicalize arbitrary cyclic factors (0 meaning Z) into a
        divisor chain via elementary divisors."""
        free = free_rank
        primes = {}
        for f in factors:
            f = abs(int(f))
            if f == 0:
                free += 1
            elif f > 1:
                for p, e in _factorize(f).items():
                    primes.setdefault(p, []).append(e)
        depth = max((len(v) for v in primes.values()), default=0)
        chain = []
        for i in range(depth):
            val = 1
            for p, es in primes.items():
                es = sorted(es, reverse=True)
                if i < len(es):
                    val *= p ** es[i]
            chain.append(val)
        chain.reverse()
        return cls(free, tuple(chain))

    def direct_sum(self, other):
        return self.from_invariant_factors(
            self.torsion + other.torsion, self.free_rank + other.free_rank)

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def to_json(self):
        return {"free_rank": self.free_rank,
                "torsion": [str(t) for t in self.torsion]}

    @classmethod
    def from_json(cls, doc):
        if (not isinstance(doc, dict) or "free_rank" not in doc
                or "torsion" not in doc):
            raise SchemaError("abelian group needs free_rank and torsion")
        r = doc["free_rank"]
        if not isinstance(r, int) or isinstance(r, bool) or r < 0:
            raise SchemaError("free_rank must be a non-negative integer")
        ts = doc["torsion"]
        if not isinstance(ts, list):
            raise SchemaError("torsion must be a list")
        try:
            factors = [int(t) for t in ts]
        except (TypeError, ValueError):
            raise SchemaError("torsion entries must be integers") from None
        return cls.from_invariant_factors(factors, r)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % t for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def _factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def homology_of_complex(d2, d1, modulus=0):
    """Homology [H0, H1, H2] of the length-2 complex of row vectors

        Z^n2 --d2--> Z^n1 --d1--> Z^n0

    (coefficients Z/modulus when a positive prime modulus is given).
    d2 may be empty; d1 must have at least one row and column."""
    if not d1 or not d1[0]:
        raise ValueError("d1 must be nonempty")
    n1, n0 = len(d1), len(d1[0])
    n2 = len(d2)
    if any(len(row) != n0 for row in d1) or any(len(row) != n1 for row in d2):
        raise ValueError("ragged boundary matrices")
    for row in _mat_mul(d2, d1):
        for x in row:
            if (x % modulus) if modulus else x:
                raise ChainComplexError("d2 * d1 is not zero")
    if modulus:
        r2 = _rank_mod_p(d2, modulus, n1) if n2 else 0
        r1 = _rank_mod_p(d1, modulus, n0)
        return [AbelianGroup.elementary(modulus, n0 - r1),
                AbelianGroup.elementary(modulus, n1 - r1 - r2),
                AbelianGroup.elementary(modulus, n2 - r2)]
    f2 = invariant_factors(d2) if n2 else []
    f1 = invariant_factors(d1)
    r2, r1 = len(f2), len(f1)
    return [AbelianGroup.from_invariant_factors(f1, n0 - r1),
            AbelianGroup.from_invariant_factors(f2, n1 - r1 - r2),
            AbelianGroup.free(n2 - r2)]
