"""Small deterministic 1-D search routines.

Both routines run a fixed, input-derived number of iterations so repeated
calls with identical inputs are bit-identical.
"""

from __future__ import annotations

import math
from typing import Callable

from .errors import NumericalError

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section_max(
    f: Callable[[float], float], a: float, b: float, tol: float
) -> tuple[float, float]:
    """Locate the maximizer of a unimodal f on [a, b] to within tol.

    Returns (x_opt, f(x_opt)). A collapsed interval (b - a <= tol) returns its
    midpoint directly, so degenerate ranges like [d, d] are legal.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or b < a:
        raise NumericalError(f"invalid search interval [{a}, {b}]")
    if tol <= 0:
        raise NumericalError("tolerance must be positive")
    dist = b - a
    if dist <= tol:
        x = 0.5 * (a + b)
        return x, f(x)

    n_iter = int(math.ceil(math.log(tol / dist) / math.log(_INV_PHI)))
    c = a + _INV_PHI_SQ * dist
    d = a + _INV_PHI * dist
    fc = f(c)
    fd = f(d)
    for _ in range(n_iter - 1):
        dist *= _INV_PHI
        if fc > fd:
            b = d
            d = c
            fd = fc
            c = a + _INV_PHI_SQ * dist
            fc = f(c)
        else:
            a = c
            c = d
            fc = fd
            d = a + _INV_PHI * dist
            fd = f(d)
    x = 0.5 * (a + d) if fc > fd else 0.5 * (c + b)
    return x, f(x)


def bisect_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    f_lo: float,
    f_hi: float,
    xtol: float,
    max_iter: int = 200,
) -> float:
    """Bisection on a sign change f(lo)*f(hi) <= 0, to interval width xtol."""
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise NumericalError("bisection bracket does not straddle a root")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= xtol:
            return mid
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return 0.5 * (lo + hi)
