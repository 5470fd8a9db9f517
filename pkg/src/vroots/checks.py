"""Per-polynomial invariant checks.

Each ``check_*`` function returns a list of human-readable violations; an
empty list means the invariant held on every case it looked at.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from vroots.analysis import count_distinct, infsup_rho, j_of_sigma, s_of
from vroots.poly import Poly, pstar
from vroots.realalg import Order, compare_ext, from_rational, separate, sign_at
from vroots.virtual import RthTower, ThomTower, all_codes, format_signs


def sample_open(a, b, count: int) -> list:
    """``count`` rationals strictly inside the extended interval ``(a, b)``; ``[]`` if empty."""
    if compare_ext(a, b) != Order.LT:
        return []
    if a.is_finite and b.is_finite:
        x, y = separate(a, b)
        if a.is_rational:
            x = a.value
        if b.is_rational:
            y = b.value
        return [x + (y - x) * k / (count + 1) for k in range(1, count + 1)]
    if a.is_finite:
        return [a.hi + k for k in range(1, count + 1)]
    if b.is_finite:
        return [b.lo - k for k in range(1, count + 1)]
    return [Fraction(k - count // 2) for k in range(count)]


def _cmp(a, b) -> int:
    return int(compare_ext(a, b))


def check_interlacing(p: Poly, rth: Optional[RthTower] = None) -> list:
    """``rho_{d,r}(P) <= rho_{d-1,r}(P') <= rho_{d,r+1}(P)`` for every ``r``."""
    rth = rth or RthTower(p)
    d = rth.degree
    bad = []
    for r in range(0, d + 1):
        low, mid, high = rth.value(r), rth.value(r, d - 1), rth.value(r + 1)
        if _cmp(low, mid) > 0 or _cmp(mid, high) > 0:
            bad.append(f"interlacing fails at r={r}: {low!r}, {mid!r}, {high!r}")
    return bad


def check_sign_property(p: Poly, rth: Optional[RthTower] = None, samples: int = 10) -> list:
    """``(-1)^(d+r) P(x) > 0`` between consecutive r-th virtual roots."""
    rth = rth or RthTower(p)
    d = rth.degree
    bad = []
    for r in range(0, d + 1):
        want = -1 if (d + r) % 2 else 1
        for x in sample_open(rth.value(r), rth.value(r + 1), samples):
            if p.sign_at(x) != want:
                bad.append(f"sign property fails at r={r}, x={x}")
    return bad


def check_pstar_membership(p: Poly, rth=None, thom=None) -> list:
    rth = rth or RthTower(p)
    thom = thom or ThomTower(p)
    star = pstar(p)
    bad = []
    for j in range(1, rth.degree + 1):
        if sign_at(star, rth.value(j)) != 0:
            bad.append(f"rho_{{d,{j}}} is not a root of P*")
    for code in all_codes(thom.degree - 1):
        if sign_at(star, thom.rho(code)) != 0:
            bad.append(f"rho_{format_signs(code)} is not a root of P*")
    return bad


def check_bridge(p: Poly, rth=None, thom=None) -> list:
    """Thom roots equal the max/min clamp of r-th roots into ``G_sigma(P')``."""
    rth = rth or RthTower(p)
    thom = thom or ThomTower(p)
    bad = []
    for code in all_codes(thom.degree - 1):
        if compare_ext(thom.rho(code), infsup_rho(p, code, thom, rth)) != Order.EQ:
            bad.append(f"bridge identity fails for {format_signs(code)}")
    return bad


def check_thom_count(p: Poly, thom=None) -> list:
    thom = thom or ThomTower(p)
    n = count_distinct(thom.rho(c) for c in all_codes(thom.degree - 1))
    if n > s_of(thom.degree):
        return [f"{n} distinct Thom roots exceed s(d) = {s_of(thom.degree)}"]
    return []


def _first_difference(sigma, mu) -> int:
    for i in range(1, min(len(sigma), len(mu))):
        if sigma[i] != mu[i]:
            return i
    return len(mu)


def check_thom_order(p: Poly, thom=None) -> list:
    """Order of ``rho_sigma(P)`` against ``rho_mu(P^[k])`` follows the first differing sign.

    The predicted sign ``sigma_{i-1} sigma_i`` is read weakly: equality is
    accepted, the opposite strict order is a violation.
    """
    thom = thom or ThomTower(p)
    d = thom.degree
    bad = []
    for sigma in all_codes(d - 1):
        rs = thom.rho(sigma)
        for k in range(1, d + 1):
            for mu in all_codes(k - 1):
                if mu == sigma:
                    continue
                i = _first_difference(sigma, mu)
                want = sigma[i - 1] * sigma[i]
                got = _cmp(rs, thom.rho(mu))
                if got == -want:
                    bad.append(f"order rule fails for {format_signs(sigma)} vs {format_signs(mu)} at level {k}")
    return bad


def check_point_rule(p: Poly, points, thom=None) -> list:
    """Position of ``rho_sigma(P)`` relative to a rational ``u`` from the signs of ``P^[i](u)``."""
    thom = thom or ThomTower(p)
    d = thom.degree
    tower = thom.tower
    bad = []
    for u in points:
        signs = [1] + [tower[i].sign_at(u) for i in range(1, d + 1)]
        for sigma in all_codes(d - 1):
            want = None
            for i in range(1, d):
                if sigma[i] != signs[i]:
                    want = sigma[i - 1] * sigma[i]
                    break
            if want is None:
                want = -sigma[d - 1] * signs[d]
            got = _cmp(thom.rho(sigma), from_rational(u))
            if want == 0:
                if got != 0:
                    bad.append(f"point rule fails for {format_signs(sigma)} at u={u}")
            elif got == -want:
                bad.append(f"point rule fails for {format_signs(sigma)} at u={u}")
    return bad


def check_u_inside_rth_gap(p: Poly, rth=None, thom=None) -> list:
    """A point of a nonempty ``U_sigma(P)`` lies between ``rho_{d,j-1}`` and ``rho_{d,j}``, ``j = j(sigma)``."""
    rth = rth or RthTower(p)
    thom = thom or ThomTower(p)
    d = thom.degree
    bad = []
    for sigma in all_codes(d):
        if not thom.u_nonempty(sigma):
            continue
        left, right = thom.g_interval(sigma)
        j = j_of_sigma(sigma)
        for x in sample_open(left, right, 1):
            xp = from_rational(x)
            if not (_cmp(rth.value(j - 1), xp) < 0 < _cmp(rth.value(j), xp)):
                bad.append(f"U_{format_signs(sigma)} leaves U_{{d,{j}}} at x={x}")
    return bad


def check_membership(p: Poly, thom=None) -> list:
    """``V`` implies ``W``, strict signs hold inside ``U``, and only two codes reach infinity."""
    thom = thom or ThomTower(p)
    d = thom.degree
    tower = thom.tower
    bad = []
    for sigma in all_codes(d):
        f, u = thom.f_nonempty(sigma), thom.u_nonempty(sigma)
        if u and not f:
            bad.append(f"{format_signs(sigma)}: U nonempty but F empty")
        left, right = thom.g_interval(sigma)
        if u:
            for x in sample_open(left, right, 1):
                if any(tower[i].sign_at(x) != sigma[i] for i in range(1, d + 1)):
                    bad.append(f"{format_signs(sigma)}: sample {x} violates the strict signs")
        all_plus = all(s > 0 for s in sigma)
        alternating = all(s == (-1) ** i for i, s in enumerate(sigma))
        if (not right.is_finite) != all_plus:
            bad.append(f"{format_signs(sigma)}: unexpected right endpoint {right!r}")
        if (not left.is_finite) != alternating:
            bad.append(f"{format_signs(sigma)}: unexpected left endpoint {left!r}")
    return bad


def run_all(p: Poly, seed: int = 0, samples: int = 10) -> dict:
    """Every check above on one monic polynomial; name -> violations."""
    rth = RthTower(p)
    thom = ThomTower(p)
    rng = random.Random(seed)
    points = [Fraction(rng.randint(-400, 400), rng.randint(1, 40)) for _ in range(samples)]
    return {
        "interlacing": check_interlacing(p, rth),
        "sign_property": check_sign_property(p, rth, samples),
        "pstar_membership": check_pstar_membership(p, rth, thom),
        "bridge_identity": check_bridge(p, rth, thom),
        "thom_count": check_thom_count(p, thom),
        "thom_order": check_thom_order(p, thom),
        "thom_point_rule": check_point_rule(p, points, thom),
        "u_inside_rth_gap": check_u_inside_rth_gap(p, rth, thom),
        "membership": check_membership(p, thom),
    }
