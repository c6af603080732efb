"""Exhaustive checks of every product formula against brute-force polynomial arithmetic."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import chains as ch
from . import pieri
from .errors import InvariantError
from .grassmannian import (
    grassmannian_permutation,
    grassmannian_pieri_col,
    grassmannian_pieri_row,
    partitions_in_box,
)
from .perm import Permutation, all_permutations, k_covers


@dataclass
class Report:
    theorem: str
    cases: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.cases == self.passed and not self.failures

    def record(self, ok: bool, case) -> None:
        self.cases += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(case)

    def to_json_obj(self) -> dict:
        d = asdict(self)
        d["failures"] = [str(f) for f in self.failures[:20]]
        d["ok"] = self.ok
        del d["seconds"]  # keeps the JSON byte-stable; the table shows timings
        return d


def _guard(fn: Callable, *args):
    try:
        return fn(*args)
    except InvariantError as exc:
        return exc


# Each check takes (v, n) and returns a list of (ok, case) pairs so that the
# driver can farm permutations out to worker processes.


def check_e_chains(v: Permutation, n: int) -> list:
    out = []
    for k in range(1, n):
        for p in range(1, k + 1):
            got = _guard(pieri.pieri_e_product, v, k, p)
            out.append((got == pieri.oracle_e_product(v, k, p), (str(v), k, p)))
    return out


def check_monk(v: Permutation, n: int) -> list:
    out = []
    for k in range(1, n):
        got = _guard(pieri.monk_product, v, k)
        ok = not isinstance(got, Exception)
        ok = ok and got == pieri.oracle_monk_product(v, k)
        ok = ok and all(abs(c) == 1 for c in got.coeffs.values())
        out.append((ok, (str(v), k)))
    return out


def check_xk(v: Permutation, n: int) -> list:
    return [
        (pieri.xk_product(v, k) == pieri.oracle_xk_product(v, k), (str(v), k))
        for k in range(1, n + 1)
    ]


def check_h_chains(v: Permutation, n: int) -> list:
    out = []
    for k in range(1, n):
        for p in range(1, n):
            got = _guard(pieri.pieri_h_product, v, k, p)
            ok = not isinstance(got, Exception)
            ok = ok and got == pieri.oracle_h_product(v, k, p)
            ok = ok and got == pieri.pieri_h_by_conjugation(v, k, p)
            out.append((ok, (str(v), k, p)))
    return out


def check_compressed(v: Permutation, n: int) -> list:
    out = []
    for k in range(1, n):
        for p in range(1, k + 1):
            ok = pieri.compressed_pieri_product(v, k, p) == pieri.pieri_e_product(v, k, p)
            out.append((ok, (str(v), k, p)))
    return out


def check_cohomology(v: Permutation, n: int) -> list:
    out = []
    for k in range(1, n):
        for p in range(1, k + 1):
            got = _guard(pieri.cohomology_pieri_product, v, k, p)
            ok = not isinstance(got, Exception)
            ok = ok and got == pieri.oracle_cohomology_product(v, k, p)
            ok = ok and all(c == 1 for c in got.coeffs.values())
            out.append((ok, (str(v), k, p)))
    return out


def saturated_k_chains(v: Permutation, k: int, n: int):
    """All saturated k-Bruhat chains from v inside S_n, no further conditions."""
    stack = [((), v)]
    while stack:
        labels, u = stack.pop()
        yield labels, u
        for t in k_covers(u, k, n):
            w = list(u.padded(n))
            w[t.a - 1], w[t.b - 1] = w[t.b - 1], w[t.a - 1]
            stack.append((labels + (t,), Permutation(w)))


def check_unique(v: Permutation, n: int) -> list:
    out = []
    for k in range(1, n):
        found: dict = {}
        for labels, end in saturated_k_chains(v, k, n):
            if ch.satisfies_p0_p1(labels):
                found.setdefault(end, []).append(labels)
        at_most_one = all(len(c) <= 1 for c in found.values())
        agree = True
        for w in all_permutations(n):
            got = ch.unique_chain(v, w, k)
            expected = found.get(w)
            if expected is None:
                agree = agree and got is None
            else:
                agree = agree and got is not None and got.labels == expected[0]
        out.append((at_most_one and agree, (str(v), k)))
    return out


def check_forbidden(v: Permutation, n: int) -> list:
    out = []
    for k in range(1, n):
        ok = all(
            ch.find_forbidden_segment(labels, k) is None
            for labels, _ in ch.iter_p0p1_chains(v, k)
        )
        out.append((ok, (str(v), k)))
    return out


PER_PERMUTATION = {
    "e_chains": check_e_chains,
    "monk": check_monk,
    "x_k": check_xk,
    "h_chains": check_h_chains,
    "compressed": check_compressed,
    "cohomology": check_cohomology,
    "unique": check_unique,
    "forbidden": check_forbidden,
}


def _run_one(args):
    name, window, n = args
    return PER_PERMUTATION[name](Permutation(window), n)


def check_transition(kmax: int) -> Report:
    rep = Report("transition")
    for k in range(2, kmax + 1):
        for p in range(1, k + 1):
            rep.record(not pieri.transition_residual(k, p), (k, p))
    return rep


def _transport(table: dict, k: int) -> pieri.BasisExpansion:
    return pieri.BasisExpansion((grassmannian_permutation(mu, k), c) for mu, c in table.items())


def check_grassmannian(k: int, box: int) -> Report:
    rep = Report("strips")
    for lam in partitions_in_box(k, box):
        v = grassmannian_permutation(lam, k)
        for p in range(1, k):
            ok = _transport(grassmannian_pieri_col(lam, k, p), k) == pieri.pieri_e_product(v, k, p)
            rep.record(ok, ("col", str(lam), k, p))
        for p in range(1, k + 1):
            ok = _transport(grassmannian_pieri_row(lam, k, p), k) == pieri.pieri_h_product(v, k, p)
            rep.record(ok, ("row", str(lam), k, p))
    return rep


def run_verification(nmax: int, workers: int = 1, theorems=None) -> list[Report]:
    """Run every theorem check over S_nmax; returns one report per theorem."""
    if nmax < 2:
        raise ValueError("nmax must be at least 2")
    names = list(theorems or list(PER_PERMUTATION) + ["transition", "strips"])
    perms = [v.window for v in all_permutations(nmax)]
    reports = []
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for name in names:
            t0 = time.perf_counter()
            if name == "transition":
                rep = check_transition(max(nmax + 1, 2))
            elif name == "strips":
                k = min(nmax - 1, 3)
                rep = check_grassmannian(k, k)
            else:
                rep = Report(name)
                jobs = [(name, w, nmax) for w in perms]
                results = pool.map(_run_one, jobs) if pool else map(_run_one, jobs)
                for rows in results:
                    for ok, case in rows:
                        rep.record(ok, case)
            rep.seconds = time.perf_counter() - t0
            reports.append(rep)
    finally:
        if pool:
            pool.shutdown()
    return reports


def format_table(reports: list[Report]) -> str:
    lines = [f"{'theorem':<12}{'cases':>8}{'passed':>8}{'seconds':>10}  status"]
    for r in reports:
        lines.append(f"{r.theorem:<12}{r.cases:>8}{r.passed:>8}{r.seconds:>10.2f}  {'PASS' if r.ok else 'FAIL'}")
    return "\n".join(lines)
