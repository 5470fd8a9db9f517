"""Acceptance gate: ten criteria, each reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are printed in the
terminal summary (and directly with ``-s``).
"""
import json
import os
import random
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

from conftest import ACCEPTANCE_LINES
from vroots.analysis import infsup_rho, j_of_sigma, modulus, s_of, thom_table
from vroots.checks import (
    check_interlacing,
    check_membership,
    check_pstar_membership,
    check_sign_property,
    sample_open,
)
from vroots.cli import main as cli_main
from vroots.cli import sweep_rows
from vroots.oracle import GridSpec, grid_argmin_abs, hyperbolic, random_monic
from vroots.parse import parse_poly
from vroots.poly import Poly
from vroots.realalg import NEG_INF, POS_INF, Order, compare_ext, from_rational, real_roots, sign_at
from vroots.rmin import rd
from vroots.virtual import RthTower, ThomTower, all_codes

DATA = Path(__file__).parent / "data"
CIRCLES = "((x-1)^2+(y+1)^2-2)((x+1)^2+(y-1)^2-2)"
WITNESSES = {2: Poly((-11, -10, 1)), 3: Poly((-8, -1, 7, 1)), 4: Poly((0, 3, -8, -10, 1))}


def report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    assert ok, line


def _eq(a, b) -> bool:
    return compare_ext(a, b) == Order.EQ


def _rand_q(rng, bound, max_den):
    return Fraction(rng.randint(-bound * max_den, bound * max_den), rng.randint(1, max_den))


def _suite_500():
    """500 random monic polynomials, degrees 1..6 in turn, coefficients in [-10, 10]."""
    return [random_monic(1 + i % 6, 10, 5000 + i) for i in range(500)]


def test_criterion_01_hyperbolic_specialization():
    rng = random.Random(101)
    bad = 0
    for _ in range(200):
        k = rng.randint(1, 6)
        roots = set()
        while len(roots) < k:
            roots.add(_rand_q(rng, 20, 9))
        roots = sorted(roots)
        p = hyperbolic(roots)
        rth = RthTower(p)
        thom = ThomTower(p)
        if not all(_eq(rth.value(j + 1), from_rational(r)) for j, r in enumerate(roots)):
            bad += 1
        top, bottom = from_rational(max(roots)), from_rational(min(roots))
        if not (_eq(rth.value(k), top) and _eq(thom.rho((1,) * k), top)):
            bad += 1
        alternating = tuple((-1) ** i for i in range(k))
        if not (_eq(rth.value(1), bottom) and _eq(thom.rho(alternating), bottom)):
            bad += 1
    # n-th root of max(a, 0) from both families; for n = 1 the root is just a
    for _ in range(60):
        n = rng.randint(2, 6)
        a = _rand_q(rng, 10, 5)
        p = Poly([-a] + [0] * (n - 1) + [1])
        v1, v2 = RthTower(p).value(n), ThomTower(p).rho((1,) * n)
        if not _eq(v1, v2):
            bad += 1
        elif a <= 0:
            bad += not _eq(v1, from_rational(0))
        else:
            bad += not (sign_at(p, v1) == 0 and compare_ext(v1, from_rational(0)) > 0)
    report(1, bad == 0, f"200 hyperbolic products + 60 n-th roots, {bad} violations")


def test_criterion_02_interlacing_and_sign():
    bad = 0
    for p in _suite_500():
        rth = RthTower(p)
        bad += len(check_interlacing(p, rth)) + len(check_sign_property(p, rth, samples=10))
    report(2, bad == 0, f"500 random monic P (d <= 6), {bad} violations")


def test_criterion_03_pstar_membership():
    bad = 0
    for p in _suite_500():
        bad += len(check_pstar_membership(p))
    report(3, bad == 0, f"both families over the 500-polynomial suite, {bad} violations")


def test_criterion_04_bridge_identity():
    bad = 0
    for d in range(1, 6):
        for i in range(200):
            p = random_monic(d, 8, 40000 + 1000 * d + i)
            thom, rth = ThomTower(p), RthTower(p)
            for sigma in all_codes(d - 1):
                if not _eq(infsup_rho(p, sigma, thom, rth), thom.rho(sigma)):
                    bad += 1
    worked = j_of_sigma((1, -1, -1)) == 2 and j_of_sigma((1, 1, -1, -1, -1)) == 4
    report(4, bad == 0 and worked, f"1000 P (200 per d <= 5), {bad} mismatches; j values {'ok' if worked else 'wrong'}")


def _pairwise_distinct(values) -> int:
    reps = []
    for v in values:
        if all(not _eq(v, r) for r in reps):
            reps.append(v)
    return len(reps)


def test_criterion_05_thom_counting():
    over = 0
    for d in range(1, 6):
        for i in range(200):
            p = random_monic(d, 8, 40000 + 1000 * d + i)
            thom = ThomTower(p)
            if _pairwise_distinct([thom.rho(s) for s in all_codes(d - 1)]) > s_of(d):
                over += 1
    reached = {}
    for d, p in WITNESSES.items():
        table = thom_table(p)
        reached[d] = _pairwise_distinct([r.root.value for r in table.rows])
    ok = over == 0 and reached == {2: 2, 3: 4, 4: 7}
    report(5, ok, f"{over} polynomials above s(d); witnesses reach {reached}")


def _window_suite(rng, count):
    """Monotone windows with rational endpoints inside a gap between roots of P'."""
    out = []
    seed = 0
    while len(out) < count:
        seed += 1
        p = random_monic(rng.randint(1, 5), 9, 70000 + seed)
        cuts = [NEG_INF] + real_roots(p.derivative()) + [POS_INF]
        i = rng.randrange(len(cuts) - 1)
        pts = sample_open(cuts[i], cuts[i + 1], 12)
        a, b = sorted(rng.sample(pts, 2))
        out.append((p, a, b))
    return out


def test_criterion_06_window_minimizer():
    rng = random.Random(606)
    bad_ineq = bad_grid = 0
    for p, a, b in _window_suite(rng, 500):
        x = rd(a, b, p)
        pa, pb = p(a), p(b)
        slope = (pb > pa) - (pb < pa)
        sa, sb = (pa > 0) - (pa < 0), (pb > 0) - (pb < 0)
        px = sign_at(p, x)
        xa = int(compare_ext(x, from_rational(a)))
        bx = int(compare_ext(from_rational(b), x))
        if not (xa >= 0 and bx >= 0):
            bad_ineq += 1
        if not (xa * sa * slope <= 0 and xa * px * slope <= 0 and bx * sb * slope >= 0 and bx * px * slope >= 0):
            bad_ineq += 1
        grid = GridSpec(a, b, 10 ** 4)
        m = grid_argmin_abs(p, grid)
        enc = x.refine(grid.step)
        if not (enc.lo - grid.step <= m <= enc.hi + grid.step):
            bad_grid += 1
    report(6, bad_ineq == 0 and bad_grid == 0, f"500 windows: {bad_ineq} inequality violations, {bad_grid} grid misses")


def _within(v, w, eps) -> bool:
    """Certify ``|v - w| <= eps`` from enclosures, refining as needed."""
    width = eps / 100
    for _ in range(6):
        a, b = v.refine(width), w.refine(width)
        upper = max(a.hi, b.hi) - min(a.lo, b.lo)
        if upper <= eps:
            return True
        lower = max(a.lo, b.lo) - min(a.hi, b.hi)
        if lower > eps:
            return False
        width /= 1000
    return False


def _all_roots(p):
    rth, thom = RthTower(p), ThomTower(p)
    d = p.degree
    return [rth.value(j) for j in range(1, d + 1)] + [thom.rho(s) for s in all_codes(d - 1)]


def test_criterion_07_modulus_soundness():
    rng = random.Random(707)
    bad = checked = 0
    for i in range(100):
        d = 1 + i % 4
        if i < 4:
            p = Poly([0] * d + [1])  # x^d: every root sits at one point, the worst case
        else:
            p = Poly([Fraction(rng.randint(-9, 9), 10) for _ in range(d)] + [1])
        base = _all_roots(p)
        for eps in (Fraction(1, 10), Fraction(1, 100)):
            omega = modulus(1, eps, d)
            for k in range(20):
                if k < 2:
                    w = [1 - 2 * k] + [0] * (d - 1)
                else:
                    w = [rng.randint(-1000, 1000) for _ in range(d)]
                    if not any(w):
                        w[0] = 1
                norm = sum(abs(c) for c in w)
                q = Poly([c + omega * wi / norm for c, wi in zip(p.coeffs[:d], w)] + [1])
                for v, u in zip(base, _all_roots(q)):
                    checked += 1
                    if not _within(v, u, eps):
                        bad += 1
    report(7, bad == 0, f"100 P x 2 eps x 20 perturbations, {checked} root pairs, {bad} moved more than eps")


def test_criterion_08_circles_sweep():
    width = Fraction(1, 10 ** 9)
    rows = sweep_rows(CIRCLES, 0, 0, 1)
    slice_ok = len(rows) == 4 and all(
        lo <= e <= hi and hi - lo <= width for (_, _, lo, hi), e in zip(rows, (-2, 0, 0, 2))
    )
    full = sweep_rows(CIRCLES, -3, 3, 121)
    columns = {}
    for x, j, lo, hi in full:
        assert hi - lo <= width
        columns.setdefault(j, []).append((lo + hi) / 2)
    jumps = [abs(b - a) for col in columns.values() for a, b in zip(col, col[1:])]
    worst = max(jumps)
    ok = slice_ok and len(full) == 121 * 4 and worst <= Fraction(1, 2)
    report(8, ok, f"slice at x=0 {'exact' if slice_ok else 'wrong'}; 121 columns, largest step change {float(worst):.4f}")


def test_criterion_09_membership():
    bad = 0
    for d in range(1, 5):
        for i in range(100):
            p = random_monic(d, 8, 90000 + 1000 * d + i)
            bad += len(check_membership(p))
    report(9, bad == 0, f"400 P (100 per d <= 4), all codes, {bad} violations")


def _cli(args, env=None):
    e = dict(os.environ)
    e.update(env or {})
    return subprocess.run([sys.executable, "-m", "vroots.cli", *args], capture_output=True, env=e)


def test_criterion_10_cli_contract(tmp_path, capsys):
    problems = []
    runs = [
        ["sweep", CIRCLES, "-3", "3", "31", "--format", "csv"],
        ["roots", "x^5-3*x+1", "--format", "json", "--precision", "15"],
        ["table", "x^4 - 10*x^3 - 8*x^2 + 3*x", "--format", "json"],
        ["check", "x^4+1", "--seed", "17", "--format", "json"],
    ]
    for args in runs:
        first, second = _cli(args), _cli(args)
        if first.returncode != 0 or first.stdout != second.stdout or not first.stdout:
            problems.append(f"not deterministic: {args[0]}")
    out_a, out_b = tmp_path / "a.csv", tmp_path / "b.csv"
    _cli(["sweep", CIRCLES, "-1", "1", "9", "--out", str(out_a)])
    _cli(["sweep", CIRCLES, "-1", "1", "9", "--out", str(out_b)])
    if out_a.read_bytes() != out_b.read_bytes():
        problems.append("sweep --out differs")
    doc = json.loads(_cli(runs[1]).stdout)
    if list(doc) != ["degree", "family", "entries"] or list(doc["entries"][0])[:5] != ["key", "lo", "hi", "defining", "provenance"]:
        problems.append("json field order")

    table = [
        (["roots", "x^2+1"], 0),
        (["roots", "x^2+"], 2),
        (["roots", "0.5*x"], 2),
        (["roots", "3*x^2+1"], 3),
        (["thom", "x^3", "+"], 3),
        (["modulus", "1/2", "1", "2"], 3),
        (["check", "x^3-x"], 0),
    ]
    for args, want in table:
        got = _cli(args).returncode
        if got != want:
            problems.append(f"{args} exited {got}, wanted {want}")
    import vroots.cli as cli

    saved = cli.run_all
    cli.run_all = lambda p, seed=0: {"interlacing": ["forced violation"]}
    try:
        got = cli_main(["check", "x^2+1"])
    finally:
        cli.run_all = saved
        capsys.readouterr()
    if got != 4:
        problems.append(f"check violation exited {got}, wanted 4")

    corpus = [line for line in (DATA / "expressions.txt").read_text().splitlines() if line.strip()]
    for text in corpus:
        p = parse_poly(text)
        if parse_poly(str(p)) != p:
            problems.append(f"round trip: {text}")
    ok = not problems and len(corpus) == 50
    report(10, ok, f"determinism, exit codes, {len(corpus)}-expression round trip; {len(problems)} problems {problems[:3]}")
