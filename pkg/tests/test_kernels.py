import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from grothpieri import _pykernels as py
from grothpieri import kernels

try:
    from grothpieri import _ckernels as cy
except ImportError:  # extension not built
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled kernels not built")

exps = st.lists(st.integers(0, 4), max_size=5).map(lambda e: tuple(e[: max((i + 1 for i, x in enumerate(e) if x), default=0)]))
polys = st.dictionaries(exps, st.integers(-10**20, 10**20).filter(bool), max_size=8)
windows = st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


@needs_ext
@given(polys, polys, st.integers(-5, 5))
def test_arithmetic_parity(f, g, c):
    assert cy.poly_mul(f, g) == py.poly_mul(f, g)
    assert cy.poly_axpy(f, g, c) == py.poly_axpy(f, g, c)
    assert cy.lowest_lex_min(f) == py.lowest_lex_min(f)


@needs_ext
@given(polys, st.integers(1, 6))
def test_divided_difference_parity(f, i):
    assert cy.divdiff(f, i) == py.divdiff(f, i)
    assert cy.isobaric(f, i) == py.isobaric(f, i)


@needs_ext
@given(windows, st.integers(1, 9), st.integers(1, 9))
def test_permutation_parity(w, a, b):
    assert cy.inversions(w) == py.inversions(w)
    if a < b:
        assert cy.is_cover(w, a, b) == py.is_cover(w, a, b)


def test_results_have_no_zero_coefficients():
    f = {(1,): 1, (0, 1): -1}
    assert kernels.poly_mul(f, {(1,): 1}) == {(2,): 1, (1, 1): -1}
    assert kernels.poly_axpy(f, f, -1) == {}


def test_pure_backend_can_be_forced():
    env = dict(os.environ, GROTHPIERI_PURE="1")
    code = "from grothpieri import kernels, pieri, perm; print(kernels.BACKEND, pieri.pieri_e_product(perm.parse_permutation('21543'), 3, 2)[perm.parse_permutation('426315')])"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "2"]
