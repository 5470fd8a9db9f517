"""Brute-force references and instance generators for the test suite.

Nothing here calls the window minimizer or the virtual-root recursions; the
references work straight from the definitions (smallest ``|P|`` on a grid,
sorted actual roots found by Sturm bisection).
"""
from __future__ import annotations

import random
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from vroots.poly import Poly, _frac, count_roots, squarefree_part
from vroots.realalg import RealAlgebraic


@dataclass(frozen=True)
class GridSpec:
    lo: Fraction
    hi: Fraction
    samples: int

    def __post_init__(self):
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        if not self.lo < self.hi:
            raise ValueError("grid needs lo < hi")
        if self.samples < 2:
            raise ValueError("grid needs at least two samples")

    @property
    def step(self) -> Fraction:
        return (self.hi - self.lo) / (self.samples - 1)

    def points(self):
        step = self.step
        return (self.lo + k * step for k in range(self.samples))


def grid_argmin_abs(p: Poly, grid: GridSpec) -> Fraction:
    """First grid point where ``|p|`` is smallest, compared exactly.

    Points are ``(A + k*B) / C`` over a common denominator, so ``C^d p(x)``
    is an integer and the comparison runs on integers.
    """
    if p.degree < 1:
        return grid.lo
    step = grid.step
    den = grid.lo.denominator * step.denominator // gcd(grid.lo.denominator, step.denominator)
    a = grid.lo.numerator * (den // grid.lo.denominator)
    b = step.numerator * (den // step.denominator)
    scale = 1
    for c in p.coeffs:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    coeffs = [int(c * scale) for c in reversed(p.coeffs)]
    powers = [den ** i for i in range(len(coeffs))]
    best_k, best_val = 0, None
    for k in range(grid.samples):
        num = a + k * b
        acc = 0
        for i, c in enumerate(coeffs):
            acc = acc * num + c * powers[i]
        acc = abs(acc)
        if best_val is None or acc < best_val:
            best_k, best_val = k, acc
    return grid.lo + best_k * step


def hyperbolic(roots: Sequence) -> Poly:
    """Monic polynomial with exactly the given (real) roots."""
    out = Poly((1,))
    for r in roots:
        out = out * Poly((-_frac(r), 1))
    return out


def random_monic(d: int, coeff_bound: int, seed: int) -> Poly:
    """Monic degree-``d`` polynomial with integer coefficients in ``[-coeff_bound, coeff_bound]``.

    Uses ``random.Random(seed)`` drawing ``randint`` once per lower coefficient,
    constant term first; the mapping from seed to polynomial is stable.
    """
    rng = random.Random(seed)
    return Poly([rng.randint(-coeff_bound, coeff_bound) for _ in range(d)] + [1])


def numeric_real_roots(p: Poly, width) -> list:
    """Enclosures of width ``<= width`` around every distinct real root, ascending.

    Plain Sturm-count bisection from the Cauchy bound; each result is a
    certified :class:`~vroots.realalg.RealAlgebraic`.
    """
    width = _frac(width)
    sq = squarefree_part(p)
    if sq.degree < 1:
        return []
    bound = 1 + max(abs(c) for c in sq.coeffs[:-1])
    todo = [(-bound, bound)]
    out = []
    while todo:
        lo, hi = todo.pop()
        n = count_roots(sq, lo, hi)
        if n == 0:
            continue
        if n == 1 and hi - lo <= width and sq.sign_at(lo) != 0:
            out.append(RealAlgebraic(sq, lo, hi))
            continue
        mid = (lo + hi) / 2
        todo.append((mid, hi))
        todo.append((lo, mid))
    out.sort(key=lambda e: e.lo)
    return out
