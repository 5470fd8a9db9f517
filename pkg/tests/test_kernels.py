import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vroots import _pykernels as py

try:
    from vroots import _ckernels as cy
except ImportError:  # pragma: no cover - extension not built
    cy = None

needs_cython = pytest.mark.skipif(cy is None, reason="compiled kernels not built")

int_polys = st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=8).map(tuple)
big_polys = st.lists(st.integers(-10 ** 40, 10 ** 40), min_size=1, max_size=6).map(tuple)
dens = st.integers(1, 10 ** 12)


def _frac_sign(coeffs, x):
    v = sum(c * x ** k for k, c in enumerate(coeffs))
    return (v > 0) - (v < 0)


@given(int_polys, st.integers(-10 ** 9, 10 ** 9), dens)
def test_pure_sign_matches_fraction(coeffs, num, den):
    assert py.sign_at(coeffs, num, den) == _frac_sign(coeffs, Fraction(num, den))


@needs_cython
@given(st.one_of(int_polys, big_polys), st.integers(-10 ** 30, 10 ** 30), dens)
def test_sign_at_agrees(coeffs, num, den):
    assert cy.sign_at(coeffs, num, den) == py.sign_at(coeffs, num, den)


@needs_cython
@given(st.lists(int_polys, min_size=1, max_size=6), st.integers(-10 ** 6, 10 ** 6), dens)
def test_variations_agree(seq, num, den):
    assert cy.variations(list(seq), num, den) == py.variations(list(seq), num, den)


@needs_cython
@given(
    st.integers(-10 ** 4, 10 ** 4),
    st.integers(1, 50),
    st.integers(1, 100),
    st.integers(0, 20),
    st.integers(0, 20),
    st.integers(1, 10 ** 9),
)
def test_bisect_agrees(r, q, c, k1, k2, wden):
    # (q x - r)(x^2 + c) has the single real root r/q
    coeffs = (-r * c, q * c, -r, q)
    lo, hi = r // q - 1 - k1, r // q + 1 + k2
    s_lo, s_hi = py.sign_at(coeffs, lo, 1), py.sign_at(coeffs, hi, 1)
    out_py = py.bisect(coeffs, lo, hi, 1, 1, wden)
    assert cy.bisect(coeffs, lo, hi, 1, 1, wden) == out_py
    a, b, d, exact = out_py
    if exact:
        assert Fraction(a, d) == Fraction(r, q)
    else:
        assert (b - a) * wden <= d
        assert py.sign_at(coeffs, a, d) == s_lo and py.sign_at(coeffs, b, d) == s_hi


@needs_cython
@given(int_polys, st.integers(-1000, 1000), st.integers(0, 50), st.integers(1, 1000))
def test_centered_sign_agrees_and_is_sound(coeffs, lo, span, den):
    hi = lo + span
    dabs = tuple(abs(k * c) for k, c in enumerate(coeffs))[1:] or (0,)
    s = py.centered_sign(coeffs, dabs, lo, hi, den)
    assert cy.centered_sign(coeffs, dabs, lo, hi, den) == s
    if s:
        for k in range(0, 11):
            x = Fraction(lo * 10 + k * span, den * 10)
            assert _frac_sign(coeffs, x) == s


def _backend(env_value):
    env = dict(os.environ)
    env["VROOTS_PURE_PYTHON"] = env_value
    out = subprocess.run(
        [sys.executable, "-c", "import vroots; print(vroots.BACKEND)"], env=env, capture_output=True, text=True, check=True
    )
    return out.stdout.strip()


def test_backend_selection():
    assert _backend("1") == "python"
    if cy is not None:
        assert _backend("0") == "cython"
