"""Partitions, Grassmannian permutations, strips and the Grassmannian Pieri rules."""

from __future__ import annotations

import json
from itertools import product
from math import comb
from typing import Iterable, Iterator

from .perm import Permutation


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        p = [int(x) for x in parts]
        if any(x < 0 for x in p):
            raise ValueError(f"negative part in {p}")
        p = [x for x in p if x]
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"parts must weakly decrease: {p}")
        return super().__new__(cls, p)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        s = text.strip()
        if s.startswith("["):
            return cls(json.loads(s))
        return cls(int(x) for x in s.replace(",", " ").split())

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """lambda_i with 1-based i, zero past the last part."""
        return self[i - 1] if i <= len(self) else 0

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(self[i] >= other[i] for i in range(len(other)))

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    __str__ = __repr__


class SkewShape:
    __slots__ = ("outer", "inner")

    def __init__(self, outer: Iterable[int], inner: Iterable[int] = ()):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def rows(self) -> list[int]:
        """Row lengths of the skew diagram."""
        return [self.outer.part(i) - self.inner.part(i) for i in range(1, len(self.outer) + 1)]

    def boxes(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        ]

    def __repr__(self) -> str:
        return f"{self.outer}/{self.inner}"


def is_horizontal_strip(s: SkewShape) -> bool:
    mu, lam = s.outer, s.inner
    return all(mu.part(i) >= lam.part(i) >= mu.part(i + 1) for i in range(1, len(mu) + 1))


def is_vertical_strip(s: SkewShape) -> bool:
    return all(r <= 1 for r in s.rows())


def strip_counts(s: SkewShape) -> tuple[int, int]:
    """(number of nonempty rows, number of nonempty columns)."""
    boxes = s.boxes()
    return len({i for i, _ in boxes}), len({j for _, j in boxes})


def grassmannian_permutation(lam: Iterable[int], k: int) -> Permutation:
    """v(lambda, k): v(i) = lambda_{k+1-i} + i on 1..k, the rest increasing."""
    lam = Partition(lam)
    if len(lam) > k:
        raise ValueError(f"partition {lam} has more than {k} parts")
    head = [lam.part(k + 1 - i) + i for i in range(1, k + 1)]
    n = head[-1] if head else 0
    used = set(head)
    tail = [x for x in range(1, n + 1) if x not in used]
    return Permutation(head + tail)


def partition_of_grassmannian(w: Permutation, k: int) -> Partition:
    """Inverse of :func:`grassmannian_permutation`; rejects permutations with a descent other than at k."""
    n = max(w.rank, k + 1)
    pw = w.padded(n)
    for i in range(n - 1):
        if pw[i] > pw[i + 1] and i + 1 != k:
            raise ValueError(f"{w} has a descent at {i + 1}, not only at {k}")
    return Partition(pw[k - i] - (k + 1 - i) for i in range(1, k + 1))


def _horizontal_strips(lam: Partition, k: int, max_size: int) -> Iterator[Partition]:
    # mu_1 free up to lam_1 + max_size, lam_{i-1} >= mu_i >= lam_i for i >= 2
    ranges = [range(lam.part(1), lam.part(1) + max_size + 1)]
    ranges += [range(lam.part(i), lam.part(i - 1) + 1) for i in range(2, k + 1)]
    for mu in product(*ranges):
        if sum(mu) - lam.weight <= max_size:
            yield Partition(mu)


def _vertical_strips(lam: Partition, k: int) -> Iterator[Partition]:
    for bump in product((0, 1), repeat=k):
        mu = [lam.part(i) + bump[i - 1] for i in range(1, k + 1)]
        if all(mu[i] >= mu[i + 1] for i in range(k - 1)):
            yield Partition(mu)


def _pieri_coeff(mu: Partition, lam: Partition, count: int, p: int) -> int:
    size = mu.weight - lam.weight
    # the sign makes the lowest-degree terms (|mu/lambda| = p) positive
    return (-1) ** (size - p) * comb(count - 1, size - p)


def grassmannian_pieri_row(lam: Iterable[int], k: int, p: int) -> dict:
    """G_lambda * G_(p) in x_1..x_k, summed over horizontal strips of size >= p."""
    lam = Partition(lam)
    if len(lam) > k:
        raise ValueError(f"partition {lam} has more than {k} parts")
    if p < 1:
        raise ValueError("need p >= 1")
    out = {}
    # binom(r-1, |mu/lam|-p) vanishes once |mu/lam| > p + r - 1 >= p + k - 1
    for mu in _horizontal_strips(lam, k, p + k - 1):
        s = SkewShape(mu, lam)
        if s.size < p:
            continue
        rows, _ = strip_counts(s)
        c = _pieri_coeff(mu, lam, rows, p)
        if c:
            out[mu] = c
    return out


def grassmannian_pieri_col(lam: Iterable[int], k: int, p: int) -> dict:
    """G_lambda * G_(1^p) in x_1..x_k (needs p < k), summed over vertical strips of size >= p."""
    lam = Partition(lam)
    if len(lam) > k:
        raise ValueError(f"partition {lam} has more than {k} parts")
    if not 1 <= p < k:
        raise ValueError(f"the column rule needs 1 <= p < k, got p={p}, k={k}")
    out = {}
    for mu in _vertical_strips(lam, k):
        s = SkewShape(mu, lam)
        if s.size < p:
            continue
        _, cols = strip_counts(s)
        c = _pieri_coeff(mu, lam, cols, p)
        if c:
            out[mu] = c
    return out


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions fitting inside a rows x cols rectangle."""

    def rec(prefix, remaining, bound):
        if remaining == 0:
            yield Partition(prefix)
            return
        for x in range(bound, -1, -1):
            yield from rec(prefix + [x], remaining - 1, x)

    yield from rec([], rows, cols)
