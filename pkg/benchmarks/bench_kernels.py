"""Compiled kernel vs pure-Python fallback.

Runs identical operation streams through bsfour._pure and (when built)
bsfour._speedups and prints wall time plus speedup.  The matrix
workload mirrors the inner loop of form congruence: accumulate
products of ring elements into matrix entries via ring_addmul.

Run as:  python3 benchmarks/bench_kernels.py
"""

import random
import time

from bsfour import _pure

try:
    from bsfour import _speedups
except ImportError:
    _speedups = None


def _random_elements(rng, k, count, wordlen=14):
    out = []
    for _ in range(count):
        word = "".join(rng.choice("aAbB") for _ in range(wordlen))
        out.append(_pure.eval_word(word, k))
    return out


def _random_terms(rng, k, terms, wordlen=8):
    out = {}
    for _ in range(terms):
        word = "".join(rng.choice("aAbB") for _ in range(wordlen))
        out[_pure.eval_word(word, k)] = rng.randint(-9, 9) or 1
    return out


def bench_group_mul(kernel):
    rng = random.Random(11)
    for k in (2, 3, -2):
        elements = _random_elements(rng, k, 400)
        for _ in range(120):
            acc = (0, 0, 0)
            for g in elements:
                acc = kernel.bs_mul(acc, g, k)
            kernel.bs_inv(acc, k)


def bench_eval_word(kernel):
    rng = random.Random(12)
    words = ["".join(rng.choice("aAbB") for _ in range(40))
             for _ in range(600)]
    for k in (2, 5, -3):
        for _ in range(12):
            for word in words:
                kernel.eval_word(word, k)


def bench_ring_mul(kernel):
    rng = random.Random(13)
    for k in (2, 3):
        elts = [_random_terms(rng, k, 12) for _ in range(40)]
        for _ in range(4):
            for p in elts:
                for q in elts:
                    kernel.ring_mul(p, q, k)


def bench_matrix_congruence(kernel):
    rng = random.Random(14)
    k = 2
    n = 6
    A = [[_random_terms(rng, k, 4, 6) for _ in range(n)] for _ in range(n)]
    U = [[_random_terms(rng, k, 2, 4) for _ in range(n)] for _ in range(n)]

    def _product(X, Y):
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = {}
                for p in range(n):
                    kernel.ring_addmul(acc, X[i][p], Y[p][j], k)
                row.append(acc)
            out.append(row)
        return out

    for _ in range(6):
        Ut = [[U[j][i] for j in range(n)] for i in range(n)]
        Ubar = [[kernel.ring_involute(U[i][j], k) for j in range(n)]
                for i in range(n)]
        _product(_product(Ut, A), Ubar)


WORKLOADS = [
    ("group multiply + invert", bench_group_mul),
    ("word evaluation", bench_eval_word),
    ("ring convolution", bench_ring_mul),
    ("matrix congruence core", bench_matrix_congruence),
]


def timed(fn, kernel, repeat=3):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        fn(kernel)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def main():
    if _speedups is None:
        print("compiled kernel not built; timing the pure kernel only")
    rows = []
    for label, fn in WORKLOADS:
        pure_t = timed(fn, _pure)
        if _speedups is not None:
            fast_t = timed(fn, _speedups)
            rows.append((label, pure_t, fast_t, pure_t / fast_t))
        else:
            rows.append((label, pure_t, None, None))
    print("%-26s %10s %10s %9s" % ("workload", "pure", "compiled", "speedup"))
    for label, pure_t, fast_t, ratio in rows:
        if fast_t is None:
            print("%-26s %9.3fs %10s %9s" % (label, pure_t, "-", "-"))
        else:
            print("%-26s %9.3fs %9.3fs %8.1fx"
                  % (label, pure_t, fast_t, ratio))


if __name__ == "__main__":
    main()
