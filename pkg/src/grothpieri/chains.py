"""Saturated chains in the k-Bruhat order: Monk chains, x_k chains, marked Pieri
chains and their duals, the uniqueness algorithm, and forbidden-segment checks.

Chains are handled in two forms.  The public enumerators return
:class:`MarkedChain` values; the products in :mod:`grothpieri.pieri` use the
lighter generators here that yield ``(labels, marks, end_window)`` tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, NamedTuple, Sequence

from . import kernels
from .perm import (
    CoverLabel,
    Permutation,
    conjugate_by_w0,
    enumeration_ambient,
)


def precedes(x: Sequence[int], y: Sequence[int]) -> bool:
    """(a,b) < (c,d) iff b > d, or b = d and a < c."""
    return x[1] > y[1] or (x[1] == y[1] and x[0] < y[0])


def tri_precedes(x: Sequence[int], y: Sequence[int]) -> bool:
    """Dual order: (a,b) < (c,d) iff a < c, or a = c and b > d."""
    return x[0] < y[0] or (x[0] == y[0] and x[1] > y[1])


def _swap(window: tuple, a: int, b: int) -> tuple:
    w = list(window)
    if b > len(w):
        w.extend(range(len(w) + 1, b + 1))
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


@dataclass(frozen=True)
class MarkedChain:
    start: Permutation
    labels: tuple
    marks: tuple = ()
    k: int = 0
    sign: int | None = None

    def __post_init__(self):
        labels = tuple(CoverLabel(*t) for t in self.labels)
        object.__setattr__(self, "labels", labels)
        marks = tuple(bool(m) for m in self.marks) if self.marks else (False,) * len(labels)
        if len(marks) != len(labels):
            raise ValueError("one mark bit per step is required")
        object.__setattr__(self, "marks", marks)

    @property
    def steps(self) -> list:
        return list(zip(self.labels, self.marks))

    @property
    def length(self) -> int:
        return len(self.labels)

    @property
    def mark_count(self) -> int:
        return sum(self.marks)

    def signed(self) -> int:
        if self.sign is not None:
            return self.sign
        return (-1) ** (self.length - self.mark_count)

    def permutations(self) -> list:
        """v_0, v_1, ..., v_q (recomputed, not stored)."""
        out = [self.start]
        w = self.start.window
        for a, b in self.labels:
            w = _swap(w, a, b)
            out.append(Permutation(w))
        return out

    @property
    def end(self) -> Permutation:
        w = self.start.window
        for a, b in self.labels:
            w = _swap(w, a, b)
        return Permutation(w)

    def is_saturated(self) -> bool:
        w = self.start.window
        for a, b in self.labels:
            if not kernels.is_cover(w, a, b):
                return False
            w = _swap(w, a, b)
        return True

    def in_k_bruhat(self, k: int | None = None) -> bool:
        k = self.k if k is None else k
        return self.is_saturated() and all(a <= k < b for a, b in self.labels)

    def unmarked(self) -> "MarkedChain":
        return MarkedChain(self.start, self.labels, (), self.k)

    def to_json_obj(self) -> dict:
        end = self.end
        return {
            "start": list(self.start.padded(max(self.start.rank, 1))),
            "k": self.k,
            "steps": [{"a": a, "b": b, "marked": m} for (a, b), m in self.steps],
            "end": list(end.padded(max(end.rank, 1))),
            "sign": self.signed(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MarkedChain":
        steps = obj["steps"]
        return cls(
            Permutation(obj["start"]),
            tuple((s["a"], s["b"]) for s in steps),
            tuple(bool(s["marked"]) for s in steps),
            obj.get("k", 0),
            obj.get("sign"),
        )

    def __str__(self) -> str:
        parts = [self.start.digits()]
        for (a, b), m in self.steps:
            parts.append(f"_({a},{b})_" if m else f"({a},{b})")
        return " ".join(parts) + f" -> {self.end.digits()}"


class ChainClassification(NamedTuple):
    forced: int
    prohibited: int
    free: int
    forced_steps: tuple = ()
    prohibited_steps: tuple = ()

    def markings(self, p: int) -> int:
        """Number of valid markings with ``p`` marks."""
        r = p - self.forced
        return comb(self.free, r) if 0 <= r <= self.free else 0


# -- conditions on label sequences -------------------------------------------


def _labels(c) -> tuple:
    return c.labels if isinstance(c, MarkedChain) else tuple(c)


def _initial_run(labels: Sequence) -> int:
    """Largest r with b_1 = ... = b_r and a_1 > ... > a_r (0 for the empty chain)."""
    if not labels:
        return 0
    r = 1
    while r < len(labels) and labels[r][1] == labels[0][1] and labels[r][0] < labels[r - 1][0]:
        r += 1
    return r


def _dual_initial_run(labels: Sequence) -> int:
    if not labels:
        return 0
    r = 1
    while r < len(labels) and labels[r][0] == labels[0][0] and labels[r][1] > labels[r - 1][1]:
        r += 1
    return r


def validate_pieri_chain(c: MarkedChain, k: int | None = None) -> bool:
    """Check that ``c`` is a k-Bruhat chain satisfying (P1)-(P4)."""
    k = c.k if k is None else k
    if not c.in_k_bruhat(k):
        return False
    labels, marks = c.labels, c.marks
    q = len(labels)
    for i in range(q - 1):
        if labels[i].b < labels[i + 1].b:
            return False
    for i in range(q):
        if marks[i] and any(labels[j].a == labels[i].a for j in range(i)):
            return False
        if not marks[i] and i + 1 < q and not precedes(labels[i], labels[i + 1]):
            return False
    return all(marks[:_initial_run(labels)])


def validate_dual_pieri_chain(c: MarkedChain, k: int | None = None) -> bool:
    """Check the dual conditions: a weakly increasing, repeated b never marked,
    unmarked steps increase in the dual order, the initial equal-a run is marked."""
    k = c.k if k is None else k
    if not c.in_k_bruhat(k):
        return False
    labels, marks = c.labels, c.marks
    q = len(labels)
    for i in range(q - 1):
        if labels[i].a > labels[i + 1].a:
            return False
    for i in range(q):
        if marks[i] and any(labels[j].b == labels[i].b for j in range(i)):
            return False
        if not marks[i] and i + 1 < q and not tri_precedes(labels[i], labels[i + 1]):
            return False
    return all(marks[:_dual_initial_run(labels)])


def satisfies_p0_p1(c) -> bool:
    """(P1) and (P0): a repeated a-position forces the next step to be larger under precedes."""
    labels = _labels(c)
    for i in range(len(labels) - 1):
        if labels[i][1] < labels[i + 1][1]:
            return False
    seen = set()
    for i in range(len(labels) - 1):
        if labels[i][0] in seen and not precedes(labels[i], labels[i + 1]):
            return False
        seen.add(labels[i][0])
    return True


def satisfies_dual_p0_p1(c) -> bool:
    labels = _labels(c)
    for i in range(len(labels) - 1):
        if labels[i][0] > labels[i + 1][0]:
            return False
    seen = set()
    for i in range(len(labels) - 1):
        if labels[i][1] in seen and not tri_precedes(labels[i], labels[i + 1]):
            return False
        seen.add(labels[i][1])
    return True


def classify_chain(c, k: int | None = None) -> ChainClassification:
    """Count the covers forced to be marked and those prohibited from being marked.

    Forced: the initial run and every step not smaller than its successor.
    Prohibited: every step whose a-position already occurred.
    """
    labels = _labels(c)
    if not satisfies_p0_p1(labels):
        raise ValueError("classify_chain needs a chain satisfying (P0) and (P1)")
    q = len(labels)
    forced = set(range(_initial_run(labels)))
    forced.update(i for i in range(q - 1) if not precedes(labels[i], labels[i + 1]))
    seen = set()
    prohibited = set()
    for i, (a, _) in enumerate(labels):
        if a in seen:
            prohibited.add(i)
        seen.add(a)
    if forced & prohibited:
        raise ValueError(f"no valid marking exists for {labels}")
    return ChainClassification(
        len(forced),
        len(prohibited),
        q - len(forced) - len(prohibited),
        tuple(sorted(forced)),
        tuple(sorted(prohibited)),
    )


def markings(c, p: int) -> Iterator[tuple]:
    """All mark vectors with ``p`` marks making the (P0,P1) chain a Pieri chain."""
    labels = _labels(c)
    cls = classify_chain(labels)
    fixed = set(cls.forced_steps)
    free = [i for i in range(len(labels)) if i not in fixed and i not in cls.prohibited_steps]
    r = p - cls.forced
    if r < 0 or r > len(free):
        return
    for extra in combinations(free, r):
        chosen = fixed.union(extra)
        yield tuple(i in chosen for i in range(len(labels)))


# -- depth-first enumeration ---------------------------------------------------


def iter_pieri_chains(v: Permutation, k: int, p: int, ambient: int | None = None):
    """Yield ``(labels, marks, end_window)`` for Pieri chains from v with p marks.

    Marks are decided step by step; the successor condition on an unmarked
    step is checked when the successor is chosen.
    """
    if ambient is None:
        ambient = enumeration_ambient(v, k)
    cover = kernels.is_cover
    labels: list = []
    marks: list = []

    def rec(window, nmarks, in_run, seen_a):
        if nmarks == p and labels:
            yield tuple(labels), tuple(marks), window
        if labels:
            pa, pb = labels[-1]
            prev_marked = marks[-1]
        else:
            pb = ambient
        for b in range(pb, k, -1):
            for a in range(1, k + 1):
                if labels:
                    if not prev_marked and not (b < pb or a > pa):
                        continue  # unmarked step must precede its successor
                if not cover(window, a, b):
                    continue
                run = (not labels) or (in_run and b == pb and a < pa)
                repeated = a in seen_a
                nxt = _swap(window, a, b)
                labels.append(CoverLabel(a, b))
                seen_add = a not in seen_a
                if seen_add:
                    seen_a.add(a)
                if not repeated and nmarks < p:
                    marks.append(True)
                    yield from rec(nxt, nmarks + 1, run, seen_a)
                    marks.pop()
                if not run:
                    marks.append(False)
                    yield from rec(nxt, nmarks, run, seen_a)
                    marks.pop()
                if seen_add:
                    seen_a.discard(a)
                labels.pop()

    yield from rec(v.window, 0, True, set())


def dual_ambient(v: Permutation, k: int, p: int) -> int:
    """Window bound for dual Pieri chains from v.

    Each step can enlarge the window by one position only; within a block of
    equal a-positions the window grows at most once past the marked steps, so
    the total growth is at most p + k beyond max(k, rank(v)).
    """
    return max(k, v.rank) + p + k


def iter_dual_pieri_chains(v: Permutation, k: int, p: int, ambient: int | None = None):
    """Yield ``(labels, marks, end_window)`` for dual Pieri chains from v with p marks."""
    if ambient is None:
        ambient = dual_ambient(v, k, p)
    cover = kernels.is_cover
    labels: list = []
    marks: list = []

    def rec(window, nmarks, in_run, seen_b):
        if nmarks == p and labels:
            yield tuple(labels), tuple(marks), window
        pa = labels[-1][0] if labels else 1
        top = min(ambient, max(len(window), k) + 1)
        for a in range(pa, k + 1):
            for b in range(k + 1, top + 1):
                if labels:
                    qa, qb = labels[-1]
                    if not marks[-1] and not (a > qa or b < qb):
                        continue
                if not cover(window, a, b):
                    continue
                run = (not labels) or (in_run and a == labels[-1][0] and b > labels[-1][1])
                repeated = b in seen_b
                nxt = _swap(window, a, b)
                labels.append(CoverLabel(a, b))
                seen_add = b not in seen_b
                if seen_add:
                    seen_b.add(b)
                if not repeated and nmarks < p:
                    marks.append(True)
                    yield from rec(nxt, nmarks + 1, run, seen_b)
                    marks.pop()
                if not run:
                    marks.append(False)
                    yield from rec(nxt, nmarks, run, seen_b)
                    marks.pop()
                if seen_add:
                    seen_b.discard(b)
                labels.pop()

    yield from rec(v.window, 0, True, set())


def iter_p0p1_chains(v: Permutation, k: int, ambient: int | None = None, include_empty: bool = False):
    """Yield ``(labels, end_window)`` for every saturated k-chain from v with (P0) and (P1)."""
    if ambient is None:
        ambient = enumeration_ambient(v, k)
    cover = kernels.is_cover
    labels: list = []

    def rec(window, seen_before_prev):
        if labels or include_empty:
            yield tuple(labels), window
        if labels:
            c, d = labels[-1]
            prev_repeated = c in seen_before_prev
        else:
            d = ambient
        for b in range(d, k, -1):
            for a in range(1, k + 1):
                if labels and b == d and prev_repeated and a <= c:
                    continue
                if not cover(window, a, b):
                    continue
                seen = seen_before_prev | {labels[-1][0]} if labels else seen_before_prev
                labels.append(CoverLabel(a, b))
                yield from rec(_swap(window, a, b), seen)
                labels.pop()

    yield from rec(v.window, frozenset())


def iter_monk_chains(v: Permutation, k: int, ambient: int | None = None):
    """Yield ``(labels, end_window)`` for strictly increasing k-chains of length >= 1."""
    if ambient is None:
        ambient = enumeration_ambient(v, k)
    cover = kernels.is_cover
    labels: list = []

    def rec(window):
        if labels:
            yield tuple(labels), window
            c, d = labels[-1]
        else:
            c, d = 0, ambient
        for b in range(d, k, -1):
            for a in range(c + 1 if b == d and labels else 1, k + 1):
                if cover(window, a, b):
                    labels.append(CoverLabel(a, b))
                    yield from rec(_swap(window, a, b))
                    labels.pop()

    yield from rec(v.window)


def iter_xk_chains(v: Permutation, k: int, ambient: int | None = None):
    """Yield ``(labels, q, end_window)``: covers (a_1,k)..(a_p,k) with a decreasing,
    then (k,b_1)..(k,b_q) with b decreasing; q counts the second kind."""
    if ambient is None:
        ambient = enumeration_ambient(v, k)
    cover = kernels.is_cover
    labels: list = []

    def second(window, top, q):
        if labels:
            yield tuple(labels), q, window
        for b in range(top - 1, k, -1):
            if cover(window, k, b):
                labels.append(CoverLabel(k, b))
                yield from second(_swap(window, k, b), b, q + 1)
                labels.pop()

    def first(window, top):
        yield from second(window, ambient + 1, 0)
        for a in range(top - 1, 0, -1):
            if cover(window, a, k):
                labels.append(CoverLabel(a, k))
                yield from first(_swap(window, a, k), a)
                labels.pop()

    yield from first(v.window, k)


def iter_cohomology_chains(v: Permutation, k: int, p: int, ambient: int | None = None):
    """Yield ``(labels, end_window)``: length-p k-chains, b weakly decreasing, a distinct."""
    if ambient is None:
        ambient = enumeration_ambient(v, k)
    cover = kernels.is_cover
    labels: list = []

    def rec(window, used, top):
        if len(labels) == p:
            yield tuple(labels), window
            return
        for b in range(top, k, -1):
            for a in range(1, k + 1):
                if a not in used and cover(window, a, b):
                    labels.append(CoverLabel(a, b))
                    yield from rec(_swap(window, a, b), used | {a}, b)
                    labels.pop()

    yield from rec(v.window, frozenset(), ambient)


# -- public enumerators --------------------------------------------------------


def enumerate_pieri_chains(v: Permutation, k: int, p: int, ambient: int | None = None) -> list[MarkedChain]:
    if not 1 <= p <= k:
        raise ValueError(f"need 1 <= p <= k, got p={p}, k={k}")
    return [MarkedChain(v, labels, marks, k) for labels, marks, _ in iter_pieri_chains(v, k, p, ambient)]


def enumerate_dual_pieri_chains(v: Permutation, k: int, p: int, ambient: int | None = None) -> list[MarkedChain]:
    if p < 1 or k < 1:
        raise ValueError(f"need p >= 1 and k >= 1, got p={p}, k={k}")
    return [MarkedChain(v, labels, marks, k) for labels, marks, _ in iter_dual_pieri_chains(v, k, p, ambient)]


def enumerate_monk_chains(v: Permutation, k: int, ambient: int | None = None) -> list[MarkedChain]:
    out = []
    for labels, _ in iter_monk_chains(v, k, ambient):
        marks = (True,) + (False,) * (len(labels) - 1)
        out.append(MarkedChain(v, labels, marks, k, (-1) ** (len(labels) - 1)))
    return out


def enumerate_xk_chains(v: Permutation, k: int, ambient: int | None = None) -> list[MarkedChain]:
    return [MarkedChain(v, labels, (), k, (-1) ** (q + 1)) for labels, q, _ in iter_xk_chains(v, k, ambient)]


def enumerate_p0p1_chains(v: Permutation, k: int, ambient: int | None = None) -> list[MarkedChain]:
    return [MarkedChain(v, labels, (), k) for labels, _ in iter_p0p1_chains(v, k, ambient)]


def enumerate_cohomology_chains(v: Permutation, k: int, p: int, ambient: int | None = None) -> list[MarkedChain]:
    return [
        MarkedChain(v, labels, (True,) * len(labels), k, 1)
        for labels, _ in iter_cohomology_chains(v, k, p, ambient)
    ]


# -- the uniqueness algorithm ----------------------------------------------


def unique_chain(v: Permutation, w: Permutation, k: int) -> MarkedChain | None:
    """The (P0,P1) chain from v to w in the k-Bruhat order, or None if there is none.

    Positions m are processed from the top down to k+1.  At each m the
    positions i <= k not yet agreeing with w whose value lies in
    [w(m), v(m)) are swapped into m in decreasing order of value.
    """
    n = max(v.rank, w.rank, k + 1)
    cur = list(v.padded(n))
    target = w.padded(n)
    labels: list = []
    seen: set = set()
    for m in range(n, k, -1):
        if cur[m - 1] == target[m - 1]:
            continue
        wm = target[m - 1]
        block = [
            i
            for i in range(1, k + 1)
            if cur[i - 1] != target[i - 1] and wm <= cur[i - 1] < cur[m - 1]
        ]
        block.sort(key=lambda i: cur[i - 1], reverse=True)
        for a in block:
            if not kernels.is_cover(tuple(cur), a, m):
                return None
            if labels:
                prev = labels[-1]
                if prev[0] in seen and not precedes(prev, (a, m)):
                    return None
                seen.add(prev[0])
            cur[a - 1], cur[m - 1] = cur[m - 1], cur[a - 1]
            labels.append(CoverLabel(a, m))
        if cur[m - 1] != target[m - 1]:
            return None
    if tuple(cur) != target:
        return None
    return MarkedChain(v, tuple(labels), (), k)


# -- forbidden segments -------------------------------------------------------


class ForbiddenSegment(NamedTuple):
    kind: str
    indices: tuple
    labels: tuple


def find_forbidden_segment(c, k: int) -> ForbiddenSegment | None:
    """First occurrence of either statically forbidden pattern, or None.

    ``"subsequence"``: (j,m), ..., (i,m), ..., (i,l) with i < j <= k < l < m.
    ``"quad"``: (i,l), ..., (h,l), ..., (h,m), ..., (i,k+1) with no other step
    between the first and last touching position i.
    """
    labels = _labels(c)
    q = len(labels)
    for s in range(q):
        j, m = labels[s]
        for t in range(s + 1, q):
            i, m2 = labels[t]
            if m2 != m or not i < j <= k < m:
                continue
            for u in range(t + 1, q):
                i2, l = labels[u]
                if i2 == i and k < l < m:
                    return ForbiddenSegment("subsequence", (s, t, u), (labels[s], labels[t], labels[u]))
    for s in range(q):
        i, l = labels[s]
        for e in range(s + 1, q):
            if i not in labels[e]:
                continue
            if labels[e] != (i, k + 1):
                break
            for t in range(s + 1, e):
                h, l2 = labels[t]
                if l2 != l:
                    continue
                for u in range(t + 1, e):
                    h2, m = labels[u]
                    if h2 == h and m != l:
                        idx = (s, t, u, e)
                        return ForbiddenSegment("quad", idx, tuple(labels[x] for x in idx))
            break
    return None


# -- length-two intervals ------------------------------------------------------


def _chain_end(start: Permutation, pair) -> Permutation | None:
    w = start.window
    for a, b in pair:
        if not kernels.is_cover(w, a, b):
            return None
        w = _swap(w, a, b)
    return Permutation(w)


def intertwine_pair(first, second, start: Permutation | None = None) -> tuple:
    """The other maximal chain of the length-two interval spanned by ``(first, second)``.

    Commuting pairs and the four intertwining shapes are resolved from the
    labels; the shapes ((j,k),(k,l)) and ((k,l),(j,k)) intertwine two ways
    and need ``start`` to decide.
    """
    a, b = first
    c, d = second
    first, second = CoverLabel(a, b), CoverLabel(c, d)
    if len({a, b, c, d}) == 4:
        return (second, first)
    if b == d and c < a:  # ((k,l),(j,l)) -> ((j,k),(k,l))
        return (CoverLabel(c, a), CoverLabel(a, b))
    if a == c and d < b:  # ((j,l),(j,k)) -> ((j,k),(k,l))
        return (CoverLabel(a, d), CoverLabel(d, b))
    if b == d and a < c:  # ((j,l),(k,l)) -> ((k,l),(j,k))
        return (CoverLabel(c, b), CoverLabel(a, c))
    if a == c and b < d:  # ((j,k),(j,l)) -> ((k,l),(j,k))
        return (CoverLabel(b, d), CoverLabel(a, b))
    if b == c:  # ((j,k),(k,l))
        candidates = [(CoverLabel(b, d), CoverLabel(a, d)), (CoverLabel(a, d), CoverLabel(a, b))]
    elif d == a:  # ((k,l),(j,k))
        candidates = [(CoverLabel(c, b), CoverLabel(a, b)), (CoverLabel(c, d), CoverLabel(c, b))]
    else:
        raise ValueError(f"({first}, {second}) is not a chain shape of length two")
    if start is None:
        raise ValueError(f"({first}, {second}) intertwines two ways; pass the start permutation")
    end = _chain_end(start, (first, second))
    if end is None:
        raise ValueError(f"({first}, {second}) is not a chain from {start}")
    for cand in candidates:
        if _chain_end(start, cand) == end:
            return cand
    raise ValueError(f"no partner chain found for ({first}, {second}) from {start}")


# -- duality ---------------------------------------------------------------


def dualize_chain(c: MarkedChain, n: int) -> MarkedChain:
    """Conjugate by w0 in S_n: labels (a,b) -> (n+1-b, n+1-a), k -> n-k, marks kept."""
    if c.end.rank > n or c.start.rank > n or any(b > n for _, b in c.labels):
        raise ValueError(f"chain does not lie in S_{n}")
    labels = tuple(CoverLabel(n + 1 - b, n + 1 - a) for a, b in c.labels)
    return MarkedChain(conjugate_by_w0(c.start, n), labels, c.marks, n - c.k if c.k else 0, c.sign)
