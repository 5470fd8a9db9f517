"""The two families of virtual roots of a monic polynomial.

``rth_root(P, j)`` extends the j-th real root; ``thom_rho(P, sigma)`` extends
the root whose derivatives have the signs ``sigma``.  Both are built level by
level over the normalized derivative tower ``P^[1], ..., P^[d] = P`` with the
window minimizer :func:`vroots.rmin.rd`.

A sign list is a tuple of ``+1``/``-1`` whose first entry is ``+1``; entry
``i`` is the sign of ``P^[i]``.  Its *length* is the number of entries minus
one, so a code for ``rho`` of a degree-d polynomial has d entries and a code
for ``tau``/``G`` has d + 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from vroots.poly import Poly, derivative_tower
from vroots.realalg import (
    NEG_INF,
    POS_INF,
    ExtendedPoint,
    Order,
    compare_ext,
    sign_at,
)
from vroots.rmin import rd

SignList = tuple


def parse_signs(text: str, implicit_head: bool = False) -> SignList:
    """``"+--"`` -> ``(1, -1, -1)``; with ``implicit_head`` a leading ``+`` is prepended."""
    table = {"+": 1, "-": -1}
    chars = text.strip().strip("[]").replace(",", "").replace(" ", "")
    try:
        signs = tuple(table[c] for c in chars)
    except KeyError as exc:
        raise ValueError(f"bad sign character {exc.args[0]!r} in {text!r}") from None
    if implicit_head:
        signs = (1,) + signs
    check_signs(signs)
    return signs


def format_signs(sigma: SignList) -> str:
    return "[" + ",".join("+" if s > 0 else "-" for s in sigma) + "]"


def check_signs(sigma: SignList, length: Optional[int] = None) -> None:
    if not sigma:
        raise ValueError("empty sign list")
    if any(s not in (1, -1) for s in sigma):
        raise ValueError(f"sign list {sigma!r} must contain only +1/-1")
    if sigma[0] != 1:
        raise ValueError("a sign list must start with +")
    if length is not None and len(sigma) - 1 != length:
        raise ValueError(f"sign list {format_signs(sigma)} has length {len(sigma) - 1}, expected {length}")


def all_codes(length: int) -> Iterator[SignList]:
    """Every sign list of the given length, in lexicographic order with ``+`` first."""
    for bits in range(1 << length):
        yield (1,) + tuple(-1 if bits >> (length - 1 - i) & 1 else 1 for i in range(length))


@dataclass(frozen=True)
class VirtualRoot:
    """A virtual root with the derivative level at which it is an actual root.

    ``rank`` is set for the r-th family and ``code`` for the Thom family.
    """

    value: ExtendedPoint
    level: Optional[int]
    rank: Optional[int] = None
    code: Optional[SignList] = None

    @property
    def is_finite(self) -> bool:
        return self.value.is_finite


def _require_monic(p: Poly) -> None:
    if not p.is_monic() or p.degree < 1:
        raise ValueError(f"{p} must be monic of degree >= 1")


class RthTower:
    """r-th virtual roots of every normalized derivative, computed bottom-up."""

    def __init__(self, p: Poly):
        _require_monic(p)
        self.poly = p
        self.degree = p.degree
        self.tower = derivative_tower(p)
        levels = [[]]
        for k in range(1, self.degree + 1):
            below = [NEG_INF] + levels[k - 1] + [POS_INF]
            q = self.tower[k]
            levels.append([rd(below[j - 1], below[j], q, check=False) for j in range(1, k + 1)])
        self.levels = levels

    def value(self, j: int, level: Optional[int] = None) -> ExtendedPoint:
        k = self.degree if level is None else level
        if j <= 0:
            return NEG_INF
        if j > k:
            return POS_INF
        return self.levels[k][j - 1]

    def root(self, j: int) -> VirtualRoot:
        v = self.value(j)
        level = provenance_level(self.tower, v) if v.is_finite else None
        return VirtualRoot(v, level, rank=j)

    def roots(self) -> list:
        return [self.root(j) for j in range(1, self.degree + 1)]


class ThomTower:
    """Thom virtual roots ``rho`` and interval endpoints ``tau`` with memoization."""

    def __init__(self, p: Poly):
        _require_monic(p)
        self.poly = p
        self.degree = p.degree
        self.tower = derivative_tower(p)
        self._rho = {}
        self._tau = {}

    def tau(self, sigma: SignList, eps: int) -> ExtendedPoint:
        """Endpoint of ``G_sigma(P^[k])`` where ``k = len(sigma) - 1``; ``eps = -1`` is the left one."""
        k = len(sigma) - 1
        key = (sigma, eps)
        hit = self._tau.get(key)
        if hit is not None:
            return hit
        if k == 0:
            out = NEG_INF if eps < 0 else POS_INF
        elif eps * sigma[k] * sigma[k - 1] > 0:
            out = self.tau(sigma[:-1], eps)
        else:
            out = self.rho(sigma[:-1])
        self._tau[key] = out
        return out

    def rho(self, sigma: SignList) -> ExtendedPoint:
        """``rho_sigma(P^[k])`` where ``k = len(sigma)``."""
        k = len(sigma)
        hit = self._rho.get(sigma)
        if hit is not None:
            return hit
        out = rd(self.tau(sigma, -1), self.tau(sigma, 1), self.tower[k], check=False)
        self._rho[sigma] = out
        return out

    def _check_level(self, sigma: SignList) -> None:
        check_signs(sigma)
        if len(sigma) - 1 > self.degree:
            raise ValueError(f"sign list {format_signs(sigma)} is longer than the degree {self.degree}")

    def g_interval(self, sigma: SignList) -> tuple:
        """``G_sigma(P^[k])`` with ``k = len(sigma) - 1``."""
        self._check_level(sigma)
        return self.tau(sigma, -1), self.tau(sigma, 1)

    def root(self, sigma: SignList) -> VirtualRoot:
        check_signs(sigma, self.degree - 1)
        v = self.rho(sigma)
        return VirtualRoot(v, thom_level(self.tower, v, sigma), code=sigma)

    def roots(self) -> list:
        return [self.root(s) for s in all_codes(self.degree - 1)]

    def f_nonempty(self, sigma: SignList) -> bool:
        """Is ``{x : sign P^[i](x) weakly sigma_i for all i}`` nonempty?"""
        self._check_level(sigma)
        if all(s > 0 for s in sigma):
            return True
        right = self.tau(sigma, 1)
        if not right.is_finite:  # pragma: no cover - only the all-plus code has +inf
            return True
        return weak_code_holds(self.tower, right, sigma)

    def u_nonempty(self, sigma: SignList) -> bool:
        """Is the strict-sign set nonempty, i.e. is ``G_sigma`` a proper interval?"""
        left, right = self.g_interval(sigma)
        return compare_ext(left, right) == Order.LT


def weak_code_holds(tower: tuple, v, sigma: SignList, upto: Optional[int] = None) -> bool:
    """``sign P^[i](v)`` is ``0`` or ``sigma_i`` for ``i = 1..upto``."""
    last = len(sigma) - 1 if upto is None else upto
    for i in range(1, last + 1):
        if sign_at(tower[i], v) == -sigma[i]:
            return False
    return True


def provenance_level(tower: tuple, v) -> int:
    """Smallest ``r >= 1`` with ``P^[r](v) = 0``."""
    for r in range(1, len(tower)):
        if sign_at(tower[r], v) == 0:
            return r
    raise ArithmeticError(f"{v!r} is not a root of any normalized derivative")


def thom_level(tower: tuple, v, sigma: SignList) -> int:
    """Smallest ``r`` such that ``v`` is the actual Thom root of ``P^[r]`` coded by ``sigma[:r]``."""
    for r in range(1, len(tower)):
        if sign_at(tower[r], v) == 0 and weak_code_holds(tower, v, sigma, r - 1):
            return r
    raise ArithmeticError(f"{v!r} is not an actual Thom root of any derivative")


def rth_root(p: Poly, j: int) -> VirtualRoot:
    """``rho_{d,j}(p)``; ``-inf`` for ``j <= 0`` and ``+inf`` for ``j > d``."""
    return RthTower(p).root(j)


def all_rth_roots(p: Poly) -> list:
    return RthTower(p).roots()


def thom_tau(p: Poly, sigma: SignList, eps: int) -> ExtendedPoint:
    _require_monic(p)
    check_signs(sigma, p.degree)
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    return ThomTower(p).tau(sigma, eps)


def thom_rho(p: Poly, sigma: SignList) -> VirtualRoot:
    return ThomTower(p).root(sigma)


def g_interval(p: Poly, sigma: SignList) -> tuple:
    _require_monic(p)
    check_signs(sigma, p.degree)
    return ThomTower(p).g_interval(sigma)


def f_nonempty(p: Poly, sigma: SignList) -> bool:
    _require_monic(p)
    check_signs(sigma, p.degree)
    return ThomTower(p).f_nonempty(sigma)


def u_nonempty(p: Poly, sigma: SignList) -> bool:
    _require_monic(p)
    check_signs(sigma, p.degree)
    return ThomTower(p).u_nonempty(sigma)


def provenance(p: Poly, v: VirtualRoot) -> Optional[int]:
    """Derivative level at which ``v`` is an actual root (``None`` at infinity)."""
    if not v.value.is_finite:
        return None
    tower = derivative_tower(p)
    if v.code is not None:
        return thom_level(tower, v.value, v.code)
    return provenance_level(tower, v.value)
