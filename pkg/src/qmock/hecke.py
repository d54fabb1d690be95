"""Direct enumeration of the Hecke-type double sum f_{a,b,c}(x, y, b).

The sum runs over the two quadrants {r,s >= 0} (weight +1) and {r,s < 0}
(weight -1) with term (-1)^(r+s) x^r y^s b^(a*binom(r,2) + b*r*s + c*binom(s,2)).
The negative quadrant is enumerated through (r,s) = (-1-u, -1-v) so both
code paths iterate over nonnegative indices.  For each row the admissible
column window is solved exactly from the convex exponent function, giving an
output-sensitive enumeration that provably drops no term.
"""

from __future__ import annotations

from ._rational import RAT, rat, floor
from .series import QSeries
from .theta import as_base

__all__ = ["f_abc", "f_abc_via_quadrants"]

_R0 = RAT(0)
_HALF = RAT(1, 2)


def _check_params(a, b, c):
    if a <= 0 or c <= 0:
        raise ValueError(f"need a > 0 and c > 0 for quadrant convergence, got {(a, b, c)}")
    if b < 0:
        raise ValueError(f"need b >= 0 so the cross term helps convergence, got {(a, b, c)}")


def f_abc(a, b, c, x, y, base, order):
    """Signed lattice sum of all terms with exponent below ``order``."""
    _check_params(a, b, c)
    base = as_base(base)
    order = rat(order)
    out = {}
    _accumulate_quadrant(out, a, b, c, x, y, base, order, negative=False)
    _accumulate_quadrant(out, a, b, c, x, y, base, order, negative=True)
    return QSeries(out, order, _clean=True)


def _accumulate_quadrant(out, a, b, c, x, y, base, order, negative):
    eb, cb = base.exp, base.coeff
    ex, cx = x.exp, x.coeff
    ey, cy = y.exp, y.coeff

    def rs(u, v):
        return (-1 - u, -1 - v) if negative else (u, v)

    def int_exp(u, v):
        r, s = rs(u, v)
        return a * (r * (r - 1)) // 2 + b * r * s + c * (s * (s - 1)) // 2

    def exponent(u, v):
        r, s = rs(u, v)
        return eb * int_exp(u, v) + ex * r + ey * s

    def coeff(u, v):
        r, s = rs(u, v)
        val = (cx ** r) * (cy ** s) * (cb ** int_exp(u, v))
        if (r + s) & 1:
            val = -val
        if negative:
            val = -val
        return val

    def add(u, v):
        e = exponent(u, v)
        cval = coeff(u, v)
        acc = out.get(e)
        s = cval if acc is None else acc + cval
        if s.is_zero():
            out.pop(e, None)
        else:
            out[e] = s

    # column vertex for fixed row u, and the row index beyond which the
    # exponent increases in u for every column
    if negative:
        def col_vertex(u):
            return (ey - eb * b * (u + 1)) / (eb * c) - RAT(3, 2)
        row_limit = ex / (eb * a) - RAT(3, 2)
    else:
        def col_vertex(u):
            return _HALF - (eb * b * u + ey) / (eb * c)
        row_limit = _HALF - ex / (eb * a)

    def row_min(u):
        v = col_vertex(u)
        vf = max(0, floor(v))
        return min(exponent(u, vf), exponent(u, vf + 1))

    u = 0
    while row_min(u) < order or u <= row_limit:
        if row_min(u) < order:
            v0 = max(0, floor(col_vertex(u)))
            v = v0
            while v >= 0 and exponent(u, v) < order:
                add(u, v)
                v -= 1
            v = v0 + 1
            while exponent(u, v) < order:
                add(u, v)
                v += 1
        u += 1


def f_abc_via_quadrants(a, b, c, x, y, base, order):
    """Independent oracle: bound |r| and |s| from the order, then re-sum the
    full rectangle in the opposite iteration order (columns outer)."""
    _check_params(a, b, c)
    base = as_base(base)
    order = rat(order)
    eb, cb = base.exp, base.coeff
    ex, cx = x.exp, x.coeff
    ey, cy = y.exp, y.coeff

    def u_part(r):
        return eb * a * (r * (r - 1)) / 2 + ex * r

    def w_part(s):
        return eb * c * (s * (s - 1)) / 2 + ey * s

    def global_min(f, vertex):
        vf = floor(vertex)
        return min(f(vf), f(vf + 1))

    u_min = global_min(u_part, _HALF - ex / (eb * a))
    w_min = global_min(w_part, _HALF - ey / (eb * c))

    def span(f, bound):
        lo = 0
        while f(lo - 1) < bound:
            lo -= 1
        hi = 0
        while f(hi + 1) < bound:
            hi += 1
        return lo, hi

    r_lo, r_hi = span(u_part, order - w_min)
    s_lo, s_hi = span(w_part, order - u_min)

    out = {}
    for s in range(s_lo, s_hi + 1):
        for r in range(r_lo, r_hi + 1):
            if (r >= 0) != (s >= 0):
                continue
            ie = a * (r * (r - 1)) // 2 + b * r * s + c * (s * (s - 1)) // 2
            e = eb * ie + ex * r + ey * s
            if e >= order:
                continue
            val = (cx ** r) * (cy ** s) * (cb ** ie)
            if (r + s) & 1:
                val = -val
            if r < 0:
                val = -val
            acc = out.get(e)
            tot = val if acc is None else acc + val
            if tot.is_zero():
                out.pop(e, None)
            else:
                out[e] = tot
    return QSeries(out, order, _clean=True)
