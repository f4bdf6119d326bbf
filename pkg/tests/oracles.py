"""Independent brute-force oracles, written straight from the definitions."""

from itertools import permutations

from qschur.shapes import SkewShape


def literal_ssrct(s: SkewShape, f: dict) -> bool:
    inner = s.inner_length
    def in_beta(i, k):
        return 1 <= i <= len(s.outer) and k <= inner(i)
    for (i, k), v in f.items():
        if (i, k + 1) in f and f[(i, k + 1)] > v:
            return False
    firsts = [f[(i, 1)] for i in range(1, len(s.outer) + 1) if (i, 1) in f]
    if any(a >= b for a, b in zip(firsts, firsts[1:])):
        return False
    for (j, c), w in f.items():
        if c < 2:
            continue
        k = c - 1
        for i in range(1, j):
            if in_beta(i, k) or ((i, k) in f and f[(i, k)] >= w):
                if not (in_beta(i, k + 1) or ((i, k + 1) in f and f[(i, k + 1)] > w)):
                    return False
    return True


def literal_ssrt(s: SkewShape, f: dict) -> bool:
    for (i, k), v in f.items():
        if (i, k + 1) in f and f[(i, k + 1)] > v:
            return False
        if (i + 1, k) in f and f[(i + 1, k)] >= v:
            return False
    return True


def multiset_fillings(s: SkewShape, counts):
    word = [v for v, c in enumerate(counts, 1) for _ in range(c)]
    cells = sorted(s.cells)
    for perm in set(permutations(word)):
        yield dict(zip(cells, perm))


def brute_ssrct(s, counts):
    return [f for f in multiset_fillings(s, counts) if literal_ssrct(s, f)]


def brute_ssrt(s, counts):
    return [f for f in multiset_fillings(s, counts) if literal_ssrt(s, f)]
