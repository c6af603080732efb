"""Products with special Grothendieck classes, by chain sums and by brute force."""

from __future__ import annotations

from math import comb

from . import chains as ch
from .basis import (
    BasisExpansion,
    expand_in_grothendieck_basis,
    expand_in_schubert_basis,
    grothendieck_of_column,
    grothendieck_of_row,
    grothendieck_polynomial,
    schubert_polynomial,
)
from .errors import InvariantError
from .perm import (
    Permutation,
    conjugate_by_w0,
    enumeration_ambient,
    k_bruhat_upper_set,
    simple_transposition,
)
from .poly import Polynomial, elementary_symmetric


class SignCollector:
    """Accumulate signed chain contributions; optionally insist on one sign per endpoint."""

    def __init__(self, check_signs: bool = True):
        self.check_signs = check_signs
        self.expansion = BasisExpansion()
        self.signs: dict = {}
        self.chains = 0

    def add(self, end, c: int) -> None:
        if not isinstance(end, Permutation):
            end = Permutation(end)
        self.chains += 1
        if self.check_signs and c:
            s = 1 if c > 0 else -1
            prev = self.signs.setdefault(end, s)
            if prev != s:
                raise InvariantError(f"contributions of both signs reach {end}")
        self.expansion.add(end, c)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")


def monk_product(v: Permutation, k: int, ambient: int | None = None) -> BasisExpansion:
    """G_v * G_{s_k} as a signed sum over increasing k-chains."""
    _check_k(k)
    acc = SignCollector()
    for labels, end in ch.iter_monk_chains(v, k, ambient):
        acc.add(end, (-1) ** (len(labels) - 1))
    return acc.expansion


def xk_product(v: Permutation, k: int, ambient: int | None = None) -> BasisExpansion:
    """x_k * G_v."""
    _check_k(k)
    acc = SignCollector(check_signs=False)
    for _, q, end in ch.iter_xk_chains(v, k, ambient):
        acc.add(end, (-1) ** (q + 1))
    return acc.expansion


def pieri_e_product(v: Permutation, k: int, p: int, ambient: int | None = None) -> BasisExpansion:
    """G_v * G_{(1^p)}(x_1..x_k) summed over Pieri chains with p marks."""
    _check_k(k)
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    if p > k:
        return BasisExpansion()
    acc = SignCollector()
    for labels, _, end in ch.iter_pieri_chains(v, k, p, ambient):
        acc.add(end, (-1) ** (len(labels) - p))
    return acc.expansion


def compressed_pieri_product(v: Permutation, k: int, p: int, ambient: int | None = None) -> BasisExpansion:
    """Same product, one binomial-weighted term per endpoint of a (P0,P1) chain."""
    _check_k(k)
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    if p > k:
        return BasisExpansion()
    if ambient is None:
        ambient = enumeration_ambient(v, k)
    out = BasisExpansion()
    for w in sorted(k_bruhat_upper_set(v, k, ambient)):
        if w == v:
            continue
        chain = ch.unique_chain(v, w, k)
        if chain is None:
            continue
        cls = ch.classify_chain(chain.labels)
        n = w.length - v.length
        out.add(w, (-1) ** (n - p) * cls.markings(p))
    return out


def pieri_h_product(v: Permutation, k: int, p: int, ambient: int | None = None) -> BasisExpansion:
    """G_v * G_{(p)}(x_1..x_k) summed over dual Pieri chains with p marks."""
    _check_k(k)
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    acc = SignCollector()
    for labels, _, end in ch.iter_dual_pieri_chains(v, k, p, ambient):
        acc.add(end, (-1) ** (len(labels) - p))
    return acc.expansion


def pieri_h_by_conjugation(v: Permutation, k: int, p: int, n: int | None = None) -> BasisExpansion:
    """The same product transported from the e-formula through w -> w0 w w0 in S_n.

    ``n`` must be large enough that every term of the product lies in S_n; the
    default is the dual chain window bound.
    """
    if n is None:
        n = ch.dual_ambient(v, k, p)
    if k >= n:
        raise ValueError(f"need k < n, got k={k}, n={n}")
    u = conjugate_by_w0(v, n)
    # a step touching position n+1 leaves S_n for good, so ambient n is exact
    raw = pieri_e_product(u, n - k, p, ambient=n)
    out = BasisExpansion()
    for w, c in raw.coeffs.items():
        if w.rank <= n:
            out.add(conjugate_by_w0(w, n), c)
    return out


def cohomology_pieri_product(v: Permutation, k: int, p: int, ambient: int | None = None) -> BasisExpansion:
    """S_v * e_p(x_1..x_k) in the Schubert basis."""
    _check_k(k)
    if not 1 <= p <= k:
        raise ValueError(f"need 1 <= p <= k, got p={p}, k={k}")
    acc = SignCollector()
    for _, end in ch.iter_cohomology_chains(v, k, p, ambient):
        acc.add(end, 1)
    return acc.expansion


def transition_residual(k: int, p: int) -> Polynomial:
    """G_(1^p)(x..k) - G_(1^p)(x..k-1) - x_k G_(1^{p-1})(x..k-1) + x_k G_(1^p)(x..k-1)."""
    if k < 2 or p < 1:
        raise ValueError(f"need k >= 2 and p >= 1, got k={k}, p={p}")
    xk = Polynomial.var(k)
    return (
        grothendieck_of_column(p, k)
        - grothendieck_of_column(p, k - 1)
        - xk * grothendieck_of_column(p - 1, k - 1)
        + xk * grothendieck_of_column(p, k - 1)
    )


# -- brute-force products ------------------------------------------------------


def oracle_e_product(v: Permutation, k: int, p: int) -> BasisExpansion:
    return expand_in_grothendieck_basis(grothendieck_polynomial(v) * grothendieck_of_column(p, k))


def oracle_h_product(v: Permutation, k: int, p: int) -> BasisExpansion:
    return expand_in_grothendieck_basis(grothendieck_polynomial(v) * grothendieck_of_row(p, k))


def oracle_monk_product(v: Permutation, k: int) -> BasisExpansion:
    return expand_in_grothendieck_basis(grothendieck_polynomial(v) * grothendieck_polynomial(simple_transposition(k)))


def oracle_xk_product(v: Permutation, k: int) -> BasisExpansion:
    return expand_in_grothendieck_basis(grothendieck_polynomial(v) * Polynomial.var(k))


def oracle_cohomology_product(v: Permutation, k: int, p: int) -> BasisExpansion:
    return expand_in_schubert_basis(schubert_polynomial(v) * elementary_symmetric(p, k))


def product(v: Permutation, k: int, p: int, cls: str = "e", method: str = "chains", ambient: int | None = None) -> BasisExpansion:
    """Dispatch used by the command line."""
    if cls not in ("e", "h"):
        raise ValueError(f"unknown class {cls!r}")
    if method == "oracle":
        if cls == "e":
            return oracle_e_product(v, k, p) if p <= k else BasisExpansion()
        return oracle_h_product(v, k, p)
    if method == "compressed":
        if cls == "e":
            return compressed_pieri_product(v, k, p, ambient)
        # dual compressed route: conjugate, compress, conjugate back
        n = ch.dual_ambient(v, k, p)
        raw = compressed_pieri_product(conjugate_by_w0(v, n), n - k, p, ambient=n)
        out = BasisExpansion()
        for w, c in raw.coeffs.items():
            if w.rank <= n:
                out.add(conjugate_by_w0(w, n), c)
        return out
    if method == "chains":
        if cls == "e":
            return pieri_e_product(v, k, p, ambient)
        return pieri_h_product(v, k, p, ambient)
    raise ValueError(f"unknown method {method!r}")


def binomial(n: int, r: int) -> int:
    return comb(n, r) if 0 <= r <= n else 0
