"""Sparse polynomials in x_1, x_2, ... with exact integer coefficients."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping

from . import kernels


def _trim(exps: Iterable[int]) -> tuple:
    e = list(exps)
    while e and e[-1] == 0:
        e.pop()
    if any(x < 0 for x in e):
        raise ValueError(f"negative exponent in {e}")
    return tuple(e)


def grlex_key(exps: tuple) -> tuple:
    """Sort key for graded-lex order with x_1 > x_2 > ...  (larger key = greater)."""
    return (sum(exps), exps)


class Polynomial:
    """Immutable element of Z[x_1, x_2, ...].

    ``terms`` maps exponent tuples (no trailing zeros) to nonzero ints.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        clean: dict = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, int):
                    raise TypeError(f"coefficients must be int, got {type(c).__name__}")
                key = _trim(e)
                v = clean.get(key, 0) + c
                if v:
                    clean[key] = v
                else:
                    clean.pop(key, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "Polynomial":
        # trusted path: keys already canonical, no zero coefficients
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._wrap({(): c} if c else {})

    @classmethod
    def var(cls, i: int) -> "Polynomial":
        if i < 1:
            raise ValueError("variables are x_1, x_2, ...")
        return cls._wrap({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], c: int = 1) -> "Polynomial":
        return cls({tuple(exps): c})

    # -- ring structure ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(kernels.poly_axpy(self.terms, other.terms, 1))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._wrap({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(kernels.poly_axpy(self.terms, other.terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial()
            return Polynomial._wrap({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(kernels.poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def axpy(self, other: "Polynomial", c: int) -> "Polynomial":
        """``self + c*other`` without building the scaled intermediate."""
        return Polynomial._wrap(kernels.poly_axpy(self.terms, other.terms, c))

    # -- inspection ------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, exps: Iterable[int]) -> int:
        return self.terms.get(_trim(exps), 0)

    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("lowest degree of the zero polynomial")
        return min(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self, descending: bool = True) -> list:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=descending)

    def leading_term(self) -> tuple:
        """(exponents, coefficient) of the graded-lex greatest monomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial._wrap({e: c for e, c in self.terms.items() if sum(e) == d})

    def swap(self, i: int) -> "Polynomial":
        """Apply s_i, exchanging x_i and x_{i+1}."""
        out = {}
        for e, c in self.terms.items():
            x = list(e) + [0] * max(0, i + 1 - len(e))
            x[i - 1], x[i] = x[i], x[i - 1]
            out[_trim(x)] = c
        return Polynomial._wrap(out)

    def evaluate(self, point: Iterable[int]) -> int:
        pt = list(point)
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, a in enumerate(e):
                if a:
                    term *= pt[i] ** a
            total += term
        return total

    def __repr__(self) -> str:
        return f"Polynomial({self.terms!r})"

    def __str__(self) -> str:
        return format_polynomial(self)


def format_polynomial(f: Polynomial) -> str:
    """Render as ``x1 + x2 - x1*x2``: ascending degree, lex-descending within a degree."""
    if not f.terms:
        return "0"
    items = sorted(f.terms.items(), key=lambda t: (sum(t[0]), tuple(-a for a in t[0])))
    out = []
    for idx, (e, c) in enumerate(items):
        factors = [f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e, 1) if a]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial."""
    if i < 1:
        raise ValueError("divided differences are indexed from 1")
    return Polynomial._wrap(kernels.divdiff(f.terms, i))


def isobaric_difference(f: Polynomial, i: int) -> Polynomial:
    """pi_i f = d_i((1 - x_{i+1}) f)."""
    if i < 1:
        raise ValueError("divided differences are indexed from 1")
    return Polynomial._wrap(kernels.isobaric(f.terms, i))


def lowest_degree_component(f: Polynomial) -> Polynomial:
    if not f.terms:
        raise ValueError("the zero polynomial has no lowest-degree component")
    return f.homogeneous_component(f.min_degree())


def elementary_symmetric(p: int, k: int) -> Polynomial:
    """e_p(x_1, ..., x_k); zero when p > k."""
    if p < 0 or k < 0:
        raise ValueError("need p >= 0 and k >= 0")
    terms = {}
    for subset in combinations(range(k), p):
        e = [0] * k
        for j in subset:
            e[j] = 1
        terms[_trim(e)] = 1
    return Polynomial._wrap(terms)


def complete_homogeneous(p: int, k: int) -> Polynomial:
    """h_p(x_1, ..., x_k)."""
    if p < 0 or k < 0:
        raise ValueError("need p >= 0 and k >= 0")
    if k == 0:
        return Polynomial.constant(1 if p == 0 else 0)
    terms = {}
    for multiset in combinations_with_replacement(range(k), p):
        e = [0] * k
        for j in multiset:
            e[j] += 1
        terms[_trim(e)] = 1
    return Polynomial._wrap(terms)
