"""Dense univariate polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd as igcd
from typing import Iterable, Optional, Sequence, Union

from vroots import kernels

Number = Union[int, Fraction]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(c)


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and ``degree == -1``.
    """

    __slots__ = ("coeffs", "_ints", "_dabs", "_hash", "_sturm")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self._ints = None
        self._dabs = None
        self._hash = None
        self._sturm = None

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> "Poly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __len__(self) -> int:
        return len(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        n = len(dv) - 1
        inv = 1 / dv[-1]
        if len(rem) <= n:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - n)
        for k in range(len(rem) - 1, n - 1, -1):
            c = rem[k] * inv
            if c:
                quo[k - n] = c
                for j in range(n + 1):
                    rem[k - n + j] -= c * dv[j]
        return Poly(quo), Poly(rem[:n])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x: Number) -> Fraction:
        return evaluate(self, x)

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return Poly(c / lc for c in self.coeffs)

    @property
    def ints(self) -> tuple:
        """Primitive integer multiple with positive scale; same signs everywhere."""
        if self._ints is None:
            if not self.coeffs:
                self._ints = ()
            else:
                den = reduce(_lcm, (c.denominator for c in self.coeffs), 1)
                nums = [c.numerator * (den // c.denominator) for c in self.coeffs]
                g = reduce(igcd, nums, 0)
                self._ints = tuple(n // g for n in nums)
        return self._ints

    @property
    def deriv_abs_ints(self) -> tuple:
        """Absolute coefficients of the derivative of :attr:`ints`."""
        if self._dabs is None:
            ints = self.ints
            self._dabs = tuple(abs(i * c) for i, c in enumerate(ints) if i)
        return self._dabs

    def sign_at(self, x: Number) -> int:
        x = _frac(x)
        return kernels.sign_at(self.ints, x.numerator, x.denominator)

    def sign_at_infinity(self, direction: int) -> int:
        """Sign as ``x`` tends to ``direction * infinity``."""
        if not self.coeffs:
            return 0
        s = 1 if self.coeffs[-1] > 0 else -1
        if direction < 0 and self.degree % 2:
            s = -s
        return s

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r})"


def _lcm(a: int, b: int) -> int:
    return a * b // igcd(a, b)


def _coerce(other) -> Optional[Poly]:
    if isinstance(other, Poly):
        return other
    if isinstance(other, (int, Fraction)):
        return Poly((other,))
    return None


def derivative(p: Poly) -> Poly:
    return p.derivative()


def normalized_derivative(p: Poly, i: int) -> Poly:
    """The monic degree-``i`` normalized derivative of ``p``.

    This is the ``(deg p - i)``-th derivative divided by its leading
    coefficient; ``i = deg p`` gives ``p`` made monic and ``i = 0`` gives 1.
    """
    if p.is_zero():
        raise ValueError("normalized derivative of the zero polynomial")
    if not 0 <= i <= p.degree:
        raise ValueError(f"level {i} outside 0..{p.degree}")
    q = p
    for _ in range(p.degree - i):
        q = q.derivative()
    return q.monic()


@lru_cache(maxsize=512)
def derivative_tower(p: Poly) -> tuple:
    """``(p^[0], p^[1], ..., p^[d])`` for a polynomial of degree ``d``."""
    d = p.degree
    tower = [p.monic()]
    q = p
    for _ in range(d):
        q = q.derivative()
        tower.append(q.monic())
    return tuple(reversed(tower))


def pstar(p: Poly) -> Poly:
    """Product of all normalized derivatives of degree 1..d (``p`` included)."""
    _require_monic(p)
    if p.degree < 1:
        raise ValueError("pstar needs degree >= 1")
    out = Poly((1,))
    for q in derivative_tower(p)[1:]:
        out = out * q
    return out


def evaluate(p: Poly, x: Number) -> Fraction:
    """Exact Horner evaluation."""
    x = _frac(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound ``1 + max |a_i|`` of a monic polynomial.

    Every real root lies strictly inside ``(-B, B)``.
    """
    _require_monic(p)
    return 1 + max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))


@lru_cache(maxsize=8192)
def gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor; ``gcd(0, 0)`` is rejected."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    a, b = p, q
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


@lru_cache(maxsize=4096)
def squarefree_part(p: Poly) -> Poly:
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    if p.degree < 1:
        return Poly((1,))
    return (p // gcd(p, p.derivative())).monic()


def sturm_sequence(p: Poly) -> list:
    """Integer Sturm sequence of the square-free part of ``p``.

    Each remainder is replaced by its primitive part with a positive scale,
    which keeps sign counts intact while bounding coefficient growth.
    """
    sq = squarefree_part(p)
    if sq._sturm is None:
        seq = [Poly(sq.ints)]
        if sq.degree >= 1:
            seq.append(Poly(sq.derivative().ints))
            while seq[-1].degree > 0:
                rem = seq[-2] % seq[-1]
                if rem.is_zero():
                    break
                seq.append(Poly((-rem).ints))
        sq._sturm = [s.ints for s in seq]
    return sq._sturm


def _variations_inf(seq: Sequence[tuple], direction: int) -> int:
    count = 0
    last = 0
    for ints in seq:
        s = 1 if ints[-1] > 0 else -1
        if direction < 0 and (len(ints) - 1) % 2:
            s = -s
        if last and s != last:
            count += 1
        last = s
    return count


def _variations(seq, x: Optional[Fraction], direction: int) -> int:
    if x is None:
        return _variations_inf(seq, direction)
    return kernels.variations(seq, x.numerator, x.denominator)


def count_roots(p: Poly, a: Optional[Number] = None, b: Optional[Number] = None) -> int:
    """Number of distinct real roots of ``p`` in ``(a, b]``.

    ``None`` stands for ``-inf`` as lower and ``+inf`` as upper endpoint.
    """
    if p.is_zero():
        raise ValueError("count_roots of the zero polynomial")
    if p.degree < 1:
        return 0
    a = None if a is None else _frac(a)
    b = None if b is None else _frac(b)
    if a is not None and b is not None and a >= b:
        return 0
    seq = sturm_sequence(p)
    return _variations(seq, a, -1) - _variations(seq, b, 1)


def count_roots_closed(p: Poly, a: Number, b: Number) -> int:
    """Number of distinct real roots of ``p`` in ``[a, b]``."""
    a = _frac(a)
    n = count_roots(p, a, b)
    if p.sign_at(a) == 0:
        n += 1
    return n


def _require_monic(p: Poly) -> None:
    if not p.is_monic():
        raise ValueError(f"polynomial {p} is not monic")
