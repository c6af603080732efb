"""Schubert and Grothendieck polynomials, and expansion in those bases."""

from __future__ import annotations

import json
from typing import Callable, Iterable, Mapping, Sequence

from . import kernels
from .errors import ExpansionError
from .perm import Permutation, apply_transposition
from .poly import (
    Polynomial,
    divided_difference,
    isobaric_difference,
)

# write-once memo tables keyed by canonical permutation
_SCHUBERT: dict = {}
_GROTHENDIECK: dict = {}


def _staircase(n: int) -> Polynomial:
    return Polynomial.monomial(range(n - 1, 0, -1))


def _ascent(w: Permutation, n: int, last: bool) -> int:
    pw = w.padded(n)
    rng = range(n - 2, -1, -1) if last else range(n - 1)
    for i in rng:
        if pw[i] < pw[i + 1]:
            return i + 1
    return 0


def _build(w: Permutation, op: Callable, cache: dict | None, last: bool = False) -> Polynomial:
    """Climb from ``w`` to w0 of S_n by ascents, then apply ``op`` back down."""
    if cache is not None and w in cache:
        return cache[w]
    n = max(w.rank, 1)
    path = []  # (permutation, index i with G_perm = op_i G_{perm s_i})
    u = w
    base = None
    while True:
        if cache is not None and u in cache:
            base = cache[u]
            break
        i = _ascent(u, n, last)
        if i == 0:
            base = _staircase(n)
            if cache is not None:
                base = cache.setdefault(u, base)
            break
        path.append((u, i))
        u = apply_transposition(u, (i, i + 1))
    f = base
    for u, i in reversed(path):
        f = op(f, i)
        if cache is not None:
            f = cache.setdefault(u, f)
    return f


def schubert_polynomial(w: Permutation) -> Polynomial:
    return _build(w, divided_difference, _SCHUBERT)


def grothendieck_polynomial(w: Permutation) -> Polynomial:
    return _build(w, isobaric_difference, _GROTHENDIECK)


def grothendieck_polynomial_uncached(w: Permutation, last_ascent: bool = False) -> Polynomial:
    """Same construction without the memo; ``last_ascent`` follows a different descent chain."""
    return _build(w, isobaric_difference, None, last=last_ascent)


def schubert_polynomial_uncached(w: Permutation, last_ascent: bool = False) -> Polynomial:
    return _build(w, divided_difference, None, last=last_ascent)


def clear_caches() -> None:
    _SCHUBERT.clear()
    _GROTHENDIECK.clear()


# -- Lehmer codes -----------------------------------------------------------


def code(w: Permutation) -> tuple:
    """Lehmer code: entry i counts j > i with w(j) < w(i).  Trailing zeros trimmed."""
    win = w.window
    c = [sum(1 for y in win[i + 1:] if y < x) for i, x in enumerate(win)]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def permutation_of_code(c: Sequence[int]) -> Permutation:
    if any(x < 0 for x in c):
        raise ValueError(f"invalid Lehmer code {tuple(c)}")
    n = max([len(c)] + [i + x + 1 for i, x in enumerate(c)])
    free = list(range(1, n + 1))
    window = [free.pop(x) for x in c]
    window.extend(free)
    return Permutation(window)


# -- basis expansions -------------------------------------------------------


class BasisExpansion:
    """Finite integer combination of basis elements indexed by permutations."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Permutation, int] | Iterable | None = None):
        self.coeffs: dict = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for w, c in items:
                self.add(w, c)

    def add(self, w: Permutation, c: int) -> None:
        v = self.coeffs.get(w, 0) + c
        if v:
            self.coeffs[w] = v
        else:
            self.coeffs.pop(w, None)

    def __getitem__(self, w: Permutation) -> int:
        return self.coeffs.get(w, 0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __contains__(self, w) -> bool:
        return w in self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, BasisExpansion):
            return self.coeffs == other.coeffs
        if isinstance(other, Mapping):
            return self.coeffs == BasisExpansion(other).coeffs
        return NotImplemented

    def __sub__(self, other: "BasisExpansion") -> "BasisExpansion":
        out = BasisExpansion(self.coeffs)
        for w, c in other.coeffs.items():
            out.add(w, -c)
        return out

    def items(self) -> list:
        """Terms sorted by (length, window)."""
        return sorted(self.coeffs.items(), key=lambda t: t[0].sort_key())

    def support(self) -> list:
        return [w for w, _ in self.items()]

    def to_json_obj(self) -> dict:
        return {"terms": [{"perm": list(w.padded(max(w.rank, 1))), "coeff": c} for w, c in self.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "BasisExpansion":
        return cls((Permutation(t["perm"]), int(t["coeff"])) for t in obj["terms"])

    def to_polynomial(self, basis: Callable = None) -> Polynomial:
        basis = basis or grothendieck_polynomial
        out = Polynomial()
        for w, c in self.coeffs.items():
            out = out.axpy(basis(w), c)
        return out

    def __repr__(self) -> str:
        inner = ", ".join(f"{w.digits()}: {c}" for w, c in self.items())
        return f"BasisExpansion({{{inner}}})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for idx, (w, c) in enumerate(self.items()):
            sign = "-" if c < 0 else ("+" if idx else "")
            mag = abs(c)
            body = f"G[{w.digits()}]" if mag == 1 else f"{mag}*G[{w.digits()}]"
            parts.append(f"{sign} {body}".strip() if idx else f"{sign}{body}")
        return " ".join(parts)


DEFAULT_MAX_ITERATIONS = 100_000


def expand_in_grothendieck_basis(f: Polynomial, max_iterations: int = DEFAULT_MAX_ITERATIONS) -> BasisExpansion:
    """Peel degree layers.

    In the lowest-degree layer of a combination of G_w, the lexicographically
    smallest monomial (x_1 > x_2 > ...) is x^code(w) for the w of smallest
    code, with coefficient c_w; subtract c_w G_w and repeat.
    """
    out = BasisExpansion()
    if not f:
        return out
    remainder = f
    start = f.min_degree()
    for _ in range(max_iterations):
        if not remainder:
            return out
        d, exps = kernels.lowest_lex_min(remainder.terms)
        if d < start:
            raise ExpansionError(f"remainder degree fell from {start} to {d}")
        c = remainder.terms[exps]
        w = permutation_of_code(exps)
        out.add(w, c)
        remainder = remainder.axpy(grothendieck_polynomial(w), -c)
    raise ExpansionError(f"expansion did not terminate within {max_iterations} steps")


def expand_in_schubert_basis(f: Polynomial, max_iterations: int = DEFAULT_MAX_ITERATIONS) -> BasisExpansion:
    if not f.is_homogeneous():
        raise ValueError("Schubert expansion needs a homogeneous polynomial")
    out = BasisExpansion()
    remainder = f
    for _ in range(max_iterations):
        if not remainder:
            return out
        _, exps = kernels.lowest_lex_min(remainder.terms)
        c = remainder.terms[exps]
        w = permutation_of_code(exps)
        out.add(w, c)
        remainder = remainder.axpy(schubert_polynomial(w), -c)
    raise ExpansionError(f"expansion did not terminate within {max_iterations} steps")


def grothendieck_of_partition(parts: Sequence[int], k: int) -> Polynomial:
    """G_lambda(x_1..x_k) = G_{v(lambda,k)}; a column (1^p) with p > k gives 0."""
    from .grassmannian import Partition, grassmannian_permutation

    lam = Partition(parts)
    if len(lam) > k:
        if all(x == 1 for x in lam):
            return Polynomial()
        raise ValueError(f"partition {list(lam)} has more than {k} parts")
    return grothendieck_polynomial(grassmannian_permutation(lam, k))


def grothendieck_of_column(p: int, k: int) -> Polynomial:
    """G_{(1^p)}(x_1..x_k), the class of the cycle c[k,p]."""
    return grothendieck_of_partition([1] * p, k)


def grothendieck_of_row(p: int, k: int) -> Polynomial:
    """G_{(p)}(x_1..x_k), the class of the cycle r[k,p]."""
    return grothendieck_of_partition([p] if p else [], k)
