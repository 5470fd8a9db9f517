"""Real algebraic numbers and extended points.

A :class:`RealAlgebraic` is a square-free monic defining polynomial together
with a rational interval isolating one of its real roots.  Either the interval
is a single rational point (the number is rational), or it is open with the
defining polynomial nonzero, and of opposite signs, at both endpoints.

Comparisons and signs are decided exactly.  Internal operations may tighten
the cached enclosure of a number; this never changes which number it is.
"""
from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from math import floor
from typing import Union

from vroots import kernels
from vroots.poly import Poly, _frac, count_roots, count_roots_closed, gcd, squarefree_part


class Order(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _order(x) -> Order:
    return Order((x > 0) - (x < 0))


class RealAlgebraic:
    __slots__ = ("defining", "_lo", "_hi")

    def __init__(self, defining: Poly, lo, hi):
        """Certified constructor: ``defining`` must have exactly one real root in ``[lo, hi]``."""
        lo, hi = _frac(lo), _frac(hi)
        if lo > hi:
            raise ValueError("empty isolating interval")
        sq = squarefree_part(defining)
        if count_roots_closed(sq, lo, hi) != 1:
            raise ValueError(f"[{lo}, {hi}] does not isolate exactly one root of {defining}")
        if sq.sign_at(lo) == 0:
            hi = lo
        elif sq.sign_at(hi) == 0:
            lo = hi
        elif sq.degree == 1:
            lo = hi = -sq.coeffs[0]
        self.defining = sq
        self._lo = lo
        self._hi = hi
        if lo == hi:
            self.defining = Poly((-lo, 1))

    @classmethod
    def _trusted(cls, sq: Poly, lo: Fraction, hi: Fraction) -> "RealAlgebraic":
        """Skip certification; caller guarantees the class invariant."""
        obj = cls.__new__(cls)
        if lo == hi or sq.degree == 1:
            q = lo if lo == hi else -sq.coeffs[0]
            obj.defining = Poly((-q, 1))
            obj._lo = obj._hi = q
        else:
            obj.defining = sq
            obj._lo = lo
            obj._hi = hi
        return obj

    @property
    def lo(self) -> Fraction:
        return self._lo

    @property
    def hi(self) -> Fraction:
        return self._hi

    @property
    def interval(self) -> tuple:
        return self._lo, self._hi

    @property
    def is_rational(self) -> bool:
        return self._lo == self._hi

    @property
    def value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("irrational algebraic number has no exact rational value")
        return self._lo

    is_finite = True

    def _tighten(self, width: Fraction) -> None:
        """Bisect the cached enclosure in place until it is at most ``width`` wide."""
        if self._lo == self._hi or self._hi - self._lo <= width:
            return
        lo, hi = self._lo, self._hi
        den = lo.denominator * hi.denominator
        ln = lo.numerator * hi.denominator
        hn = hi.numerator * lo.denominator
        ln, hn, den, exact = kernels.bisect(
            self.defining.ints, ln, hn, den, width.numerator, width.denominator
        )
        new_lo, new_hi = Fraction(ln, den), Fraction(hn, den)
        if exact:
            self.defining = Poly((-new_lo, 1))
        self._lo, self._hi = new_lo, new_hi

    def _halve(self, times: int = 1) -> None:
        if self._lo != self._hi:
            self._tighten((self._hi - self._lo) / (1 << times))

    def refine(self, width) -> "RealAlgebraic":
        """A copy whose isolating interval is at most ``width`` wide."""
        width = _frac(width)
        if width <= 0:
            raise ValueError("width must be positive")
        out = RealAlgebraic._trusted(self.defining, self._lo, self._hi)
        out._tighten(width)
        return out

    def approx(self) -> float:
        return float((self._lo + self._hi) / 2)

    def __repr__(self) -> str:
        if self.is_rational:
            return f"RealAlgebraic({self._lo})"
        return f"RealAlgebraic({self.defining}, [{self._lo}, {self._hi}])"

    def _cmp(self, other) -> Order:
        return compare_ext(self, other)

    def __eq__(self, other):
        try:
            return compare_ext(self, other) == Order.EQ
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return compare_ext(self, other) < 0

    def __le__(self, other):
        return compare_ext(self, other) <= 0

    def __gt__(self, other):
        return compare_ext(self, other) > 0

    def __ge__(self, other):
        return compare_ext(self, other) >= 0

    __hash__ = None


class Infinity:
    """One of the two points at infinity of the extended real line."""

    __slots__ = ("sign",)
    is_finite = False
    is_rational = False

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self) -> str:
        return "+inf" if self.sign > 0 else "-inf"

    def __eq__(self, other):
        try:
            return compare_ext(self, other) == Order.EQ
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return compare_ext(self, other) < 0

    def __le__(self, other):
        return compare_ext(self, other) <= 0

    def __gt__(self, other):
        return compare_ext(self, other) > 0

    def __ge__(self, other):
        return compare_ext(self, other) >= 0

    def __hash__(self):
        return hash(("inf", self.sign))


NEG_INF = Infinity(-1)
POS_INF = Infinity(1)

ExtendedPoint = Union[RealAlgebraic, Infinity]


def from_rational(q) -> RealAlgebraic:
    q = _frac(q)
    return RealAlgebraic._trusted(Poly((-q, 1)), q, q)


def as_point(v) -> ExtendedPoint:
    """Coerce ints and Fractions to :class:`RealAlgebraic`; pass points through."""
    if isinstance(v, (RealAlgebraic, Infinity)):
        return v
    if isinstance(v, (int, Fraction)):
        return from_rational(v)
    raise TypeError(f"cannot use {type(v).__name__} as an extended point")


def cmp_rational(alpha: RealAlgebraic, q) -> Order:
    """Exact sign of ``alpha - q``; tightens ``alpha`` as a side effect."""
    q = _frac(q)
    if alpha.is_rational:
        return _order(alpha._lo - q)
    if q <= alpha._lo:
        return Order.GT
    if q >= alpha._hi:
        return Order.LT
    p = alpha.defining
    s = p.sign_at(q)
    if s == 0:
        alpha.defining = Poly((-q, 1))
        alpha._lo = alpha._hi = q
        return Order.EQ
    if s == p.sign_at(alpha._lo):
        alpha._lo = q
        return Order.GT
    alpha._hi = q
    return Order.LT


def _root_in_common(alpha: RealAlgebraic, beta: RealAlgebraic) -> bool:
    g = gcd(alpha.defining, beta.defining)
    if g.degree < 1:
        return False
    lo = max(alpha._lo, beta._lo)
    hi = min(alpha._hi, beta._hi)
    return count_roots_closed(g, lo, hi) > 0


def compare(alpha: RealAlgebraic, beta: RealAlgebraic) -> Order:
    """Exact order of two real algebraic numbers."""
    if alpha is beta:
        return Order.EQ
    if alpha.is_rational and beta.is_rational:
        return _order(alpha._lo - beta._lo)
    if alpha.is_rational:
        return Order(-cmp_rational(beta, alpha._lo))
    if beta.is_rational:
        return cmp_rational(alpha, beta._lo)
    if alpha._hi <= beta._lo:
        return Order.LT
    if beta._hi <= alpha._lo:
        return Order.GT
    if _root_in_common(alpha, beta):
        return Order.EQ
    while True:
        if alpha._hi <= beta._lo:
            return Order.LT
        if beta._hi <= alpha._lo:
            return Order.GT
        m = (max(alpha._lo, beta._lo) + min(alpha._hi, beta._hi)) / 2
        ca = cmp_rational(alpha, m)
        cb = cmp_rational(beta, m)
        if ca != cb:
            return _order(ca - cb)
        if ca == Order.EQ:  # pragma: no cover - excluded by the gcd test
            return Order.EQ


def compare_ext(a, b) -> Order:
    """Order on the extended real line; ints and Fractions are accepted."""
    a, b = as_point(a), as_point(b)
    if isinstance(a, Infinity) or isinstance(b, Infinity):
        sa = a.sign if isinstance(a, Infinity) else 0
        sb = b.sign if isinstance(b, Infinity) else 0
        return _order(sa - sb)
    return compare(a, b)


def ext_max(a, b) -> ExtendedPoint:
    return a if compare_ext(a, b) >= 0 else b


def ext_min(a, b) -> ExtendedPoint:
    return a if compare_ext(a, b) <= 0 else b


def sign_at(q: Poly, alpha: RealAlgebraic) -> int:
    """Exact sign of ``q(alpha)``."""
    if q.is_zero():
        raise ValueError("sign of the zero polynomial")
    if alpha.is_rational:
        return q.sign_at(alpha._lo)
    if q.degree < 1:
        return 1 if q.coeffs[0] > 0 else -1
    s = _centered(q, alpha)
    if s:
        return s
    g = gcd(q, alpha.defining)
    if g.degree >= 1 and g.sign_at(alpha._lo) != g.sign_at(alpha._hi):
        return 0
    while True:
        alpha._halve(4)
        if alpha.is_rational:
            return q.sign_at(alpha._lo)
        s = _centered(q, alpha)
        if s:
            return s


def _centered(q: Poly, alpha: RealAlgebraic) -> int:
    lo, hi = alpha._lo, alpha._hi
    den = lo.denominator * hi.denominator
    return kernels.centered_sign(
        q.ints,
        q.deriv_abs_ints,
        lo.numerator * hi.denominator,
        hi.numerator * lo.denominator,
        den,
    )


def separate(alpha: RealAlgebraic, beta: RealAlgebraic) -> tuple:
    """Rationals ``x < y`` with ``alpha <= x`` and ``y <= beta``; needs ``alpha < beta``."""
    if compare(alpha, beta) != Order.LT:
        raise ValueError("separate needs alpha < beta")
    while True:
        x = alpha._hi
        y = beta._lo
        if x < y:
            return x, y
        wa = alpha._hi - alpha._lo
        wb = beta._hi - beta._lo
        if not alpha.is_rational and (beta.is_rational or wa >= wb):
            alpha._halve()
        else:
            beta._halve()


def simplest_dyadic(x: Fraction, y: Fraction) -> Fraction:
    """Dyadic rational with the smallest denominator in the open interval ``(x, y)``.

    Among the candidates with that denominator, the one nearest the centre.
    """
    if not x < y:
        raise ValueError("empty interval")
    k = 0
    while True:
        scale = 1 << k
        first = floor(x * scale) + 1
        last = -floor(-y * scale) - 1
        if first <= last:
            centre = (x + y) * scale / 2
            n = min(max(round(centre), first), last)
            return Fraction(n, scale)
        k += 1


def midpoint_rational(alpha, beta) -> Fraction:
    """Some rational strictly between ``alpha < beta`` (deterministic choice)."""
    alpha, beta = as_point(alpha), as_point(beta)
    if isinstance(alpha, Infinity) or isinstance(beta, Infinity):
        raise ValueError("midpoint_rational needs finite points")
    x, y = separate(alpha, beta)
    if alpha.is_rational:
        x = alpha._lo
    if beta.is_rational:
        y = beta._lo
    return simplest_dyadic(x, y)


def rational_between(a: ExtendedPoint, b: ExtendedPoint) -> Fraction:
    """A rational strictly inside ``(a, b)`` for extended points ``a < b``."""
    if compare_ext(a, b) != Order.LT:
        raise ValueError("rational_between needs a < b")
    if a.is_finite and b.is_finite:
        return midpoint_rational(a, b)
    if a.is_finite:
        return Fraction(floor(a._hi) + 1)
    if b.is_finite:
        return Fraction(-floor(-b._lo) - 1)
    return Fraction(0)


def real_roots(p: Poly) -> list:
    """All distinct real roots of ``p``, ascending, as isolated algebraic numbers."""
    sq = squarefree_part(p)
    if sq.degree < 1:
        return []
    bound = 1 + max(abs(c) for c in sq.coeffs[:-1])
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(sq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            if sq.sign_at(hi) == 0:
                out.append(from_rational(hi))
                continue
            if sq.sign_at(lo) != 0:
                out.append(RealAlgebraic._trusted(sq, lo, hi))
                continue
        m = (lo + hi) / 2
        stack.append((m, hi))
        stack.append((lo, m))
    return out


def snap_rational(alpha: RealAlgebraic, max_den: int) -> RealAlgebraic:
    """``alpha`` as a rational point if it is a rational with denominator ``<= max_den``.

    Two such rationals are at least ``1/max_den^2`` apart, so once the
    enclosure is narrower than half that, the best approximation of its
    midpoint is the only candidate.  A miss leaves ``alpha`` as it was.
    """
    if alpha.is_rational:
        return alpha
    tight = alpha.refine(Fraction(1, 2 * max_den * max_den + 1))
    if tight.is_rational:
        return tight
    c = ((tight.lo + tight.hi) / 2).limit_denominator(max_den)
    if tight.lo < c < tight.hi and tight.defining.sign_at(c) == 0:
        return from_rational(c)
    return alpha
