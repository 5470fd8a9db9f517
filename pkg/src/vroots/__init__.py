"""Exact r-th and Thom virtual roots of monic rational polynomials."""
from vroots.analysis import (
    ThomTable,
    classify_cubic,
    infsup_rho,
    j_of_sigma,
    modulus,
    s_of,
    thom_table,
    w_v_membership,
)
from vroots.kernels import BACKEND
from vroots.parse import ParseError, parse_bivariate, parse_poly
from vroots.poly import Poly, derivative_tower, normalized_derivative, pstar
from vroots.realalg import NEG_INF, POS_INF, Order, RealAlgebraic, compare, compare_ext, sign_at
from vroots.rmin import MonotoneWindow, WindowError, rd
from vroots.virtual import (
    RthTower,
    ThomTower,
    VirtualRoot,
    all_rth_roots,
    f_nonempty,
    g_interval,
    provenance,
    rth_root,
    thom_rho,
    thom_tau,
    u_nonempty,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "MonotoneWindow",
    "NEG_INF",
    "Order",
    "POS_INF",
    "ParseError",
    "Poly",
    "RealAlgebraic",
    "RthTower",
    "ThomTable",
    "ThomTower",
    "VirtualRoot",
    "WindowError",
    "all_rth_roots",
    "classify_cubic",
    "compare",
    "compare_ext",
    "derivative_tower",
    "f_nonempty",
    "g_interval",
    "infsup_rho",
    "j_of_sigma",
    "modulus",
    "normalized_derivative",
    "parse_bivariate",
    "parse_poly",
    "provenance",
    "pstar",
    "rd",
    "rth_root",
    "s_of",
    "sign_at",
    "thom_rho",
    "thom_table",
    "thom_tau",
    "u_nonempty",
    "w_v_membership",
]
