"""Relations between the two virtual-root families, and derived quantities."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from vroots.poly import Poly, _frac
from vroots.realalg import Order, compare_ext, ext_max, ext_min, real_roots, sign_at
from vroots.virtual import (
    RthTower,
    SignList,
    ThomTower,
    VirtualRoot,
    all_codes,
    check_signs,
)


def j_of_sigma(sigma: SignList) -> int:
    """One plus the number of adjacent equal pairs in ``sigma``."""
    if not sigma:
        raise ValueError("empty sign list")
    check_signs(sigma)
    return 1 + sum((1 + a * b) // 2 for a, b in zip(sigma, sigma[1:]))


def infsup_rho(p: Poly, sigma: SignList, thom: ThomTower = None, rth: RthTower = None):
    """``max(tau^-_sigma(P'), min(tau^+_sigma(P'), rho_{d, j(sigma)}(P)))``.

    ``sigma`` is a code of length ``deg p - 1``; the result equals
    ``thom_rho(p, sigma)``.
    """
    thom = thom or ThomTower(p)
    rth = rth or RthTower(p)
    check_signs(sigma, thom.degree - 1)
    low = thom.tau(sigma, -1)
    high = thom.tau(sigma, 1)
    return ext_max(low, ext_min(high, rth.value(j_of_sigma(sigma))))


def s_of(d: int) -> int:
    """Largest possible number of distinct Thom virtual roots in degree ``d``."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return 1 + d * (d - 1) // 2


def count_distinct(points) -> int:
    """Number of distinct extended points, by exact comparison."""
    ordered = sorted(points, key=cmp_to_key(compare_ext))
    return sum(1 for i, v in enumerate(ordered) if i == 0 or compare_ext(ordered[i - 1], v) != Order.EQ)


@dataclass(frozen=True)
class ThomRow:
    code: SignList
    root: VirtualRoot
    f_nonempty: bool
    u_nonempty: bool

    @property
    def actual(self) -> bool:
        """Is the value an actual Thom root of the polynomial itself?"""
        return self.root.level == len(self.code)


@dataclass(frozen=True)
class ThomTable:
    """All ``2^(d-1)`` Thom virtual roots of a degree-d polynomial.

    ``f_nonempty``/``u_nonempty`` of a row refer to the row's code read as a
    full code of the derivative ``P^[d-1]``, i.e. whether ``G_code(P')`` is
    realized weakly / is a proper interval.
    """

    degree: int
    rows: tuple
    distinct_count: int

    @property
    def bound(self) -> int:
        return s_of(self.degree)


def thom_table(p: Poly) -> ThomTable:
    thom = ThomTower(p)
    d = thom.degree
    rows = []
    for code in all_codes(d - 1):
        root = thom.root(code)
        f = thom.f_nonempty(code)
        u = thom.u_nonempty(code)
        rows.append(ThomRow(code, root, f, u))
    distinct = count_distinct(r.root.value for r in rows)
    return ThomTable(d, tuple(rows), distinct)


@dataclass(frozen=True)
class CubicEntry:
    """What ``rho_sigma(x^3 + 3px + 2q)`` is, read off its provenance level.

    ``level`` 3: a root of P and ``rank`` is its position among the real roots;
    2: a root of P' and ``sign`` tells which one; 1: the zero of P''.
    """

    code: SignList
    level: int
    rank: int = None
    sign: int = None
    value: object = None

    def describe(self) -> str:
        if self.level == 3:
            return f"root of P (rank {self.rank})"
        if self.level == 2:
            return "positive root of P'" if self.sign > 0 else "negative root of P'"
        return "zero of P''"


def classify_cubic(p, q) -> dict:
    """Map each of the four codes of length 2 to the object ``rho_sigma`` equals."""
    p, q = _frac(p), _frac(q)
    if p * q * (p ** 3 + q ** 2) == 0:
        raise ValueError("(p, q) lies on the boundary locus pq(p^3 + q^2) = 0")
    poly = Poly((2 * q, 3 * p, 0, 1))
    thom = ThomTower(poly)
    real = real_roots(poly)
    out = {}
    for code in all_codes(2):
        root = thom.root(code)
        v = root.value
        entry = CubicEntry(code, root.level, value=v)
        if root.level == 3:
            rank = 1 + sum(1 for r in real if compare_ext(r, v) == Order.LT)
            entry = CubicEntry(code, 3, rank=rank, value=v)
        elif root.level == 2:
            entry = CubicEntry(code, 2, sign=sign_at(Poly((0, 1)), v), value=v)
        out[code] = entry
    return out


def modulus(m, eps, d: int) -> Fraction:
    """Coefficient perturbation (l1) keeping every virtual root within ``eps``.

    Valid while ``|a_i|^(d-i) <= m`` with ``m >= 1``; exact rational value of
    ``2m (eps / (d(d+1)(2d-1) m))^d``.
    """
    m, eps = _frac(m), _frac(eps)
    if m < 1:
        raise ValueError("M must be >= 1")
    if eps <= 0:
        raise ValueError("eps must be > 0")
    if not isinstance(d, int) or d < 1:
        raise ValueError("degree must be a positive integer")
    return 2 * m * (eps / (d * (d + 1) * (2 * d - 1) * m)) ** d


@dataclass(frozen=True)
class Membership:
    in_w: bool
    in_v: bool


def w_v_membership(p: Poly, sigma: SignList) -> Membership:
    """Whether the closed (W) and open (V) sign sets coded by ``sigma`` are nonempty."""
    thom = ThomTower(p)
    check_signs(sigma, thom.degree)
    return Membership(thom.f_nonempty(sigma), thom.u_nonempty(sigma))
