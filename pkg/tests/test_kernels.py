import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fillsurg import kernels
from fillsurg.kernels import available_backends, get_backend
from strategies import braid_words

py = get_backend("python")
needs_cython = pytest.mark.skipif("cython" not in available_backends(), reason="compiled kernels not built")
polys = st.lists(st.integers(-50, 50), max_size=8)


def test_selected_backend_is_exported():
    assert kernels.BACKEND in available_backends()
    assert kernels.poly_mul is get_backend(kernels.BACKEND).poly_mul
    with pytest.raises(ValueError):
        get_backend("fortran")


@given(polys, polys)
def test_python_poly_ring(a, b):
    prod = py.poly_mul(a, b)
    if py.trim(b):
        assert py.poly_exact_div(prod, b) == py.trim(a)
    assert py.poly_sub(py.poly_add(a, b), b) == py.trim(a)


def test_inexact_division():
    with pytest.raises(ArithmeticError):
        py.poly_exact_div([1, 0, 1], [1, 1])
    with pytest.raises(ZeroDivisionError):
        py.poly_exact_div([1], [0])


@needs_cython
class TestAgreement:
    cy = get_backend("cython") if "cython" in available_backends() else None

    @given(polys, polys)
    def test_poly_ops(self, a, b):
        for name in ("poly_add", "poly_sub", "poly_mul"):
            assert getattr(self.cy, name)(list(a), list(b)) == getattr(py, name)(list(a), list(b))
        if py.trim(b):
            prod = py.poly_mul(a, b)
            assert self.cy.poly_exact_div(prod, list(b)) == py.poly_exact_div(prod, b)

    @settings(max_examples=60)
    @given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(polys, min_size=n, max_size=n), min_size=n, max_size=n)))
    def test_det(self, rows):
        assert self.cy.poly_det([[list(e) for e in r] for r in rows]) == py.poly_det(rows)

    @given(braid_words(max_strands=6, max_length=20))
    def test_burau(self, w):
        assert self.cy.burau_poly_matrix(w.strands, list(w.letters)) == py.burau_poly_matrix(w.strands, list(w.letters))

    @given(st.integers(0, 400), st.integers(1, 4))
    def test_square_sums(self, limit, m):
        assert self.cy.square_sum_table(limit, m) == py.square_sum_table(limit, m)

    @given(st.integers(0, 120), st.integers(0, 25))
    def test_square_partitions(self, r, s):
        assert sorted(self.cy.square_partitions(r, s)) == sorted(py.square_partitions(r, s))


def test_env_forces_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, FILLSURG_BACKEND="python")
    out = subprocess.run(
        [sys.executable, "-c", "import fillsurg; print(fillsurg.BACKEND)"], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "python"
