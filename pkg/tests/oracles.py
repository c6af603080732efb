"""Brute-force references used by the tests.

Nothing here calls the chain enumerators or the product formulas under test.
"""

from itertools import combinations, permutations

from grothpieri.perm import Permutation


def inversion_count(window):
    return sum(1 for i, j in combinations(range(len(window)), 2) if window[i] > window[j])


def swap(window, a, b, n):
    w = list(window) + list(range(len(window) + 1, n + 1))
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


def covers_by_length(window, n, k=None):
    """Transpositions (a,b) raising the inversion count by exactly one."""
    base = inversion_count(tuple(window) + tuple(range(len(window) + 1, n + 1)))
    out = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if k is not None and not a <= k < b:
                continue
            if inversion_count(swap(window, a, b, n)) == base + 1:
                out.append((a, b))
    return out


def all_k_chains(v, k, n):
    """Every saturated k-Bruhat chain from v inside S_n, found through length counts."""
    out = []

    def rec(window, labels):
        out.append((tuple(labels), Permutation(window)))
        for a, b in covers_by_length(window, n, k):
            labels.append((a, b))
            rec(swap(window, a, b, n), labels)
            labels.pop()

    rec(tuple(v.padded(n)), [])
    return out


def precedes(x, y):
    return x[1] > y[1] or (x[1] == y[1] and x[0] < y[0])


def pieri_ok(labels, marks):
    """Conditions (P1)-(P4) on a label sequence that is already a k-Bruhat chain."""
    q = len(labels)
    if any(labels[i][1] < labels[i + 1][1] for i in range(q - 1)):
        return False
    for i in range(q):
        if marks[i] and any(labels[j][0] == labels[i][0] for j in range(i)):
            return False
        if not marks[i] and i + 1 < q and not precedes(labels[i], labels[i + 1]):
            return False
    r = 0
    while r < q and (r == 0 or (labels[r][1] == labels[0][1] and labels[r][0] < labels[r - 1][0])):
        r += 1
    return q == 0 or marks[r - 1]


def dual_pieri_ok(labels, marks):
    """The dual conditions, obtained from pieri_ok by (a,b) -> (N-b, N-a)."""
    big = 1 + max([b for _, b in labels] + [0])
    flipped = [(big - b, big - a) for a, b in labels]
    return pieri_ok(flipped, marks)


def mark_vectors(q, p):
    for chosen in combinations(range(q), p):
        yield tuple(i in chosen for i in range(q))


def symmetric_group(n):
    return [Permutation(p) for p in permutations(range(1, n + 1))]
