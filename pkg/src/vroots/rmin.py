"""Minimizer of ``|P|`` on a window where ``P`` is monotone."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from vroots.poly import Poly, count_roots, root_bound, squarefree_part
from vroots.realalg import (
    ExtendedPoint,
    Order,
    RealAlgebraic,
    as_point,
    compare_ext,
    from_rational,
    midpoint_rational,
    real_roots,
    separate,
    sign_at,
)


class WindowError(ValueError):
    """The derivative changes sign on the window, or the window is malformed."""


@dataclass(frozen=True)
class MonotoneWindow:
    a: ExtendedPoint
    b: ExtendedPoint
    poly: Poly

    def __post_init__(self):
        object.__setattr__(self, "a", as_point(self.a))
        object.__setattr__(self, "b", as_point(self.b))


def _finite_window(a: ExtendedPoint, b: ExtendedPoint, p: Poly):
    """Replace infinite endpoints by the Cauchy bound, as ``max(a, B)`` / ``min(b, -B)``."""
    if a.is_finite and b.is_finite:
        return a, b
    bound = root_bound(p)
    if not b.is_finite:
        if a.is_finite:
            b = a if compare_ext(a, bound) >= 0 else from_rational(bound)
        else:
            a, b = from_rational(-bound), from_rational(bound)
            return a, b
    if not a.is_finite:
        a = b if compare_ext(b, -bound) <= 0 else from_rational(-bound)
    return a, b


def _sample_nonroot(q: Poly, a: RealAlgebraic, b: RealAlgebraic) -> Fraction:
    """A rational strictly inside ``(a, b)`` where ``q`` does not vanish."""
    lo, hi = a, b
    while True:
        m = midpoint_rational(lo, hi)
        if q.sign_at(m) != 0:
            return m
        hi = from_rational(m)


def derivative_sign(p: Poly, a: RealAlgebraic, b: RealAlgebraic, check: bool = True) -> int:
    """Constant sign of ``p'`` on ``(a, b)``, i.e. the sign of ``p(b) - p(a)``.

    With ``check`` the sign is sampled between every pair of consecutive
    derivative roots inside the window and a :class:`WindowError` is raised if
    two samples disagree.
    """
    dp = p.derivative()
    if dp.degree < 1:
        return 1 if dp.coeffs[0] > 0 else -1
    if not check:
        return dp.sign_at(_sample_nonroot(dp, a, b))
    cuts = [a]
    for r in real_roots(dp):
        if compare_ext(a, r) == Order.LT and compare_ext(r, b) == Order.LT:
            cuts.append(r)
    cuts.append(b)
    signs = {dp.sign_at(midpoint_rational(x, y)) for x, y in zip(cuts, cuts[1:])}
    if len(signs) != 1:
        raise WindowError(f"derivative of {p} changes sign on the window")
    return signs.pop()


def _bracket(p: Poly, a: RealAlgebraic, b: RealAlgebraic, sa: int, sb: int):
    """Rationals ``a <= x < y <= b`` with ``sign p(x) = sa`` and ``sign p(y) = sb``."""
    while True:
        x, y = separate(a, b)
        if a.is_rational:
            x = a.value
        if b.is_rational:
            y = b.value
        ok_x = p.sign_at(x) == sa
        ok_y = p.sign_at(y) == sb
        if ok_x and ok_y:
            return x, y
        if not ok_x:
            a._halve()
        if not ok_y:
            b._halve()


def rd(a, b, p: Poly, check: bool = True) -> RealAlgebraic:
    """The point of ``[a, b]`` minimizing ``|p|``; ``p`` must be monotone there.

    Cases are tried in order: ``a == b``; ``(p(b)-p(a))*p(a) >= 0`` gives ``a``;
    ``(p(b)-p(a))*p(b) <= 0`` gives ``b``; otherwise the root of ``p`` strictly
    inside.  Infinite endpoints are first replaced by the Cauchy bound.
    """
    if p.degree < 1:
        raise WindowError("rd needs a polynomial of degree >= 1")
    if not p.is_monic():
        raise WindowError(f"{p} is not monic")
    a, b = as_point(a), as_point(b)
    if compare_ext(a, b) == Order.GT:
        raise WindowError("window has a > b")
    if not a.is_finite and a.sign > 0 or not b.is_finite and b.sign < 0:
        raise WindowError("window endpoint at the wrong infinity")
    a, b = _finite_window(a, b, p)
    if compare_ext(a, b) == Order.EQ:
        return a
    slope = derivative_sign(p, a, b, check)
    sa = sign_at(p, a)
    if slope * sa >= 0:
        return a
    sb = sign_at(p, b)
    if slope * sb <= 0:
        return b
    x, y = _bracket(p, a, b, sa, sb)
    sq = squarefree_part(p)
    if count_roots(sq, x, y) != 1:  # pragma: no cover - monotonicity guarantees it
        raise WindowError("root of a monotone polynomial is not unique")
    return RealAlgebraic._trusted(sq, x, y)


def rd_window(w: MonotoneWindow, check: bool = True) -> RealAlgebraic:
    return rd(w.a, w.b, w.poly, check)
