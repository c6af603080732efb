"""Permutations of S_infinity in one-line notation, covers and the k-Bruhat order.

Positions and values are 1-based.  A permutation is stored by its window with
trailing fixed points removed, so equality is equality of windows.
"""

from __future__ import annotations

import itertools
from collections import namedtuple
from typing import Iterable, Iterator, Sequence

from . import kernels


class Permutation:
    """An element of S_infinity, immutable and hashable.

    >>> w = Permutation([2, 1, 5, 4, 3, 6])
    >>> w.window
    (2, 1, 5, 4, 3)
    >>> w(6), w.length
    (6, 4)
    """

    __slots__ = ("window", "_length", "_hash")

    def __init__(self, window: Iterable[int] = ()):
        w = list(window)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation window: {w}")
        n = len(w)
        while n and w[n - 1] == n:
            n -= 1
        self.window = tuple(w[:n])
        self._length = -1
        self._hash = hash(self.window)

    @classmethod
    def _from_trimmed(cls, window: tuple) -> "Permutation":
        obj = cls.__new__(cls)
        obj.window = window
        obj._length = -1
        obj._hash = hash(window)
        return obj

    @classmethod
    def identity(cls) -> "Permutation":
        return cls._from_trimmed(())

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return parse_permutation(text)

    def __call__(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"positions are 1-based, got {i}")
        return self.window[i - 1] if i <= len(self.window) else i

    def __len__(self) -> int:
        return len(self.window)

    @property
    def rank(self) -> int:
        """Smallest n with the permutation in S_n (0 for the identity)."""
        return len(self.window)

    @property
    def length(self) -> int:
        if self._length < 0:
            self._length = kernels.inversions(self.window)
        return self._length

    def padded(self, n: int) -> tuple:
        """The one-line notation on positions 1..n (n at least the rank)."""
        if n < len(self.window):
            raise ValueError(f"{self} does not lie in S_{n}")
        return self.window + tuple(range(len(self.window) + 1, n + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.window)
        for i, x in enumerate(self.window, 1):
            inv[x - 1] = i
        return Permutation._from_trimmed(tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        # composition as functions: (self * other)(i) = self(other(i))
        n = max(len(self.window), len(other.window))
        return Permutation(self(other(i)) for i in range(1, n + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.window == other.window

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        return (self.length, self.window)

    def __lt__(self, other: "Permutation") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"Permutation({list(self.window)})"

    def __str__(self) -> str:
        if not self.window:
            return "1"
        return ",".join(map(str, self.window))

    def digits(self) -> str:
        """Contiguous-digit form when every value is at most 9."""
        if not self.window:
            return "1"
        if len(self.window) > 9:
            return str(self)
        return "".join(map(str, self.window))


class CoverLabel(namedtuple("CoverLabel", "a b")):
    """Transposition of positions ``a < b`` labelling a cover."""

    __slots__ = ()

    def __new__(cls, a: int, b: int):
        if not (1 <= a < b):
            raise ValueError(f"cover label needs 1 <= a < b, got ({a},{b})")
        return super().__new__(cls, a, b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def parse_permutation(text: str) -> Permutation:
    """Parse ``"4,2,6,3,1,5"`` or ``"426315"``; ``"1"`` and ``""`` give the identity."""
    s = text.strip().strip("[]()")
    if not s:
        return Permutation.identity()
    if "," in s or " " in s:
        parts = [p for p in s.replace(",", " ").split() if p]
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"malformed permutation: {text!r}") from None
    elif s.isdigit():
        values = [int(ch) for ch in s]
    else:
        raise ValueError(f"malformed permutation: {text!r}")
    return Permutation(values)


def length(w: Permutation) -> int:
    return w.length


def apply_transposition(w: Permutation, t: Sequence[int]) -> Permutation:
    """Exchange the values in positions ``t[0]`` and ``t[1]`` (right multiplication)."""
    a, b = t
    if a > b:
        a, b = b, a
    window = list(w.padded(max(len(w.window), b)))
    window[a - 1], window[b - 1] = window[b - 1], window[a - 1]
    return Permutation(window)


def is_cover(v: Permutation, t: Sequence[int]) -> bool:
    a, b = t
    return a < b and kernels.is_cover(v.window, a, b)


def enumeration_ambient(v: Permutation, k: int) -> int:
    """n + 1 where n is the least integer with n >= k and v fixing everything past n."""
    return max(k, v.rank) + 1


def k_covers(v: Permutation, k: int, ambient: int | None = None) -> list[CoverLabel]:
    """All labels (a, b) with a <= k < b <= ambient that are covers of ``v``."""
    if ambient is None:
        ambient = enumeration_ambient(v, k)
    if k >= ambient:
        raise ValueError(f"need k < ambient, got k={k}, ambient={ambient}")
    win = v.window
    cover = kernels.is_cover
    return [
        CoverLabel(a, b)
        for b in range(k + 1, ambient + 1)
        for a in range(1, k + 1)
        if cover(win, a, b)
    ]


def k_bruhat_leq(v: Permutation, w: Permutation, k: int) -> bool:
    """Test v <=_k w through the two-condition characterization of the k-Bruhat order."""
    n = max(v.rank, w.rank, k + 1)
    pv = v.padded(n)
    pw = w.padded(n)
    for a in range(k):
        if pv[a] > pw[a]:
            return False
    for b in range(k, n):
        if pv[b] < pw[b]:
            return False
    for a in range(n):
        for b in range(a + 1, n):
            if pv[a] < pv[b] and pw[a] > pw[b] and not (a < k <= b):
                return False
    return True


def k_bruhat_upper_set(v: Permutation, k: int, ambient: int | None = None) -> set:
    """Every w in S_ambient reachable from v by k-covers (v included)."""
    if ambient is None:
        ambient = enumeration_ambient(v, k)
    seen = {v.padded(max(v.rank, ambient))}
    frontier = list(seen)
    cover = kernels.is_cover
    while frontier:
        nxt = []
        for win in frontier:
            for b in range(k + 1, ambient + 1):
                for a in range(1, k + 1):
                    if cover(win, a, b):
                        w = list(win)
                        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
                        t = tuple(w)
                        if t not in seen:
                            seen.add(t)
                            nxt.append(t)
        frontier = nxt
    return {Permutation(t) for t in seen}


def conjugate_by_w0(w: Permutation, n: int) -> Permutation:
    """w0 w w0 in S_n, i.e. i -> n+1 - w(n+1-i)."""
    if w.rank > n:
        raise ValueError(f"{w} does not lie in S_{n}")
    return Permutation(n + 1 - w(n + 1 - i) for i in range(1, n + 1))


def flatten(w: Permutation, positions: Iterable[int]) -> Permutation:
    """Restrict ``w`` to ``positions`` and renumber the values to 1..m, preserving order."""
    pos = sorted(set(positions))
    values = [w(i) for i in pos]
    ranks = {x: r for r, x in enumerate(sorted(values), 1)}
    return Permutation(ranks[x] for x in values)


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order of one-line notation."""
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def longest_element(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def simple_transposition(i: int) -> Permutation:
    return apply_transposition(Permutation.identity(), (i, i + 1))
