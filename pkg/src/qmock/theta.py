"""Pochhammer products and the theta function j with its named specializations.

The base of every function here is a monomial b = c*q^e with e > 0, so that
specializations such as q -> q^8 or q -> -q^3 are uniform: powers of the base
twist the coefficient by c^k and scale the exponent by e*k.

j is computed from its bilateral sum (quadratic exponent growth gives
O(sqrt(order)) terms); the triple-product form is kept as an independent
cross-check.
"""

from __future__ import annotations

from ._rational import RAT, rat, floor
from .series import (
    DivergentProduct,
    GR_ONE,
    QMonomial,
    QSeries,
    qpow,
)

__all__ = [
    "as_base",
    "base_pow",
    "pochhammer_finite",
    "pochhammer_infinite",
    "jacobi_theta",
    "jacobi_theta_product",
    "J",
    "Jbar",
    "Jm",
]

_R0 = RAT(0)
_HALF = RAT(1, 2)


def as_base(b):
    """Coerce a rational e (meaning q^e) or a monomial to a base monomial."""
    if isinstance(b, QMonomial):
        return b
    return qpow(rat(b))


def base_pow(base, k):
    """base^k as a monomial; fractional k needs base coefficient 1."""
    return base ** k


def _one_minus(m):
    """The exact polynomial 1 - c*q^e."""
    if m.exp == 0:
        return QSeries.constant(GR_ONE - m.coeff)
    return QSeries({_R0: GR_ONE, m.exp: -m.coeff}, None)


def pochhammer_finite(x, base, n, order=None):
    """(x; b)_n: the exact finite product of (1 - x*b^i), i < n.

    With ``order`` given the product is truncated there; otherwise it is an
    exact Laurent polynomial.
    """
    if n < 0:
        raise ValueError(f"pochhammer length must be nonnegative, got {n}")
    base = as_base(base)
    if order is None:
        out = QSeries.one(None)
        for i in range(n):
            out = out * _one_minus(x * (base ** i))
        return out
    order = rat(order)
    factors = [x * (base ** i) for i in range(n)]
    guard = -sum((f.exp for f in factors if f.exp < 0), _R0)
    work = order + guard
    out = QSeries.one(work)
    for f in factors:
        out = (out * _one_minus(f)).truncate(work)
    return out.truncate(order)


def pochhammer_infinite(x, base, order):
    """(x; b)_inf truncated below ``order``; factors past the order are 1."""
    base = as_base(base)
    order = rat(order)
    if base.exp <= 0:
        raise DivergentProduct(
            f"infinite product needs a base with positive exponent, got {base}"
        )
    # factors with negative exponents erode precision; inflate to compensate
    guard = _R0
    e = x.exp
    while e <= 0:
        if e < 0:
            guard -= e
        e += base.exp
    work = order + guard
    out = QSeries.one(work)
    i = 0
    f = x
    while f.exp < work:
        if f.exp == 0 and f.coeff == GR_ONE:
            return QSeries.zero(order)  # a factor (1 - q^0) kills the product
        out = (out * _one_minus(f)).truncate(work)
        i += 1
        f = x * (base ** i)
    return out.truncate(order)


def jacobi_theta(x, base, order):
    """j(x; b) as the bilateral sum of (-1)^n b^binom(n,2) x^n below ``order``."""
    base = as_base(base)
    order = rat(order)
    if base.exp <= 0:
        raise DivergentProduct(
            f"theta sum needs a base with positive exponent, got {base}"
        )
    eb, ex = base.exp, x.exp
    cb, cx = base.coeff, x.coeff

    def exponent(n):
        return eb * (n * (n - 1)) / 2 + ex * n

    def term(n):
        c = (cx ** n) * (cb ** (n * (n - 1) // 2))
        if n & 1:
            c = -c
        return c

    out = {}

    def add(n):
        e = exponent(n)
        c = term(n)
        acc = out.get(e)
        s = c if acc is None else acc + c
        if s.is_zero():
            out.pop(e, None)
        else:
            out[e] = s

    vertex = _HALF - ex / eb
    n = floor(vertex)
    while exponent(n) < order:
        add(n)
        n -= 1
    n = floor(vertex) + 1
    while exponent(n) < order:
        add(n)
        n += 1
    return QSeries(out, order, _clean=True)


def jacobi_theta_product(x, base, order):
    """The triple-product form (x)_inf (b/x)_inf (b)_inf, as a cross-check."""
    base = as_base(base)
    order = rat(order)
    a1 = pochhammer_infinite(x, base, order)
    a2 = pochhammer_infinite(base * x.inverse(), base, order)
    a3 = pochhammer_infinite(base, base, order)
    l1 = a1.low_degree() or _R0
    l2 = a2.low_degree() or _R0
    pad = -min(l1 + l2, _R0)
    if pad > 0:
        work = order + pad
        a1 = pochhammer_infinite(x, base, work)
        a2 = pochhammer_infinite(base * x.inverse(), base, work)
        a3 = pochhammer_infinite(base, base, work)
    return (a1 * a2 * a3).truncate(order)


def J(a, m, order, base=None):
    """J_{a,m} = j(q^a; q^m), under an optional base substitution."""
    b = as_base(m) if base is None else base ** rat(m)
    x = qpow(a) if base is None else base ** rat(a)
    return jacobi_theta(x, b, order)


def Jbar(a, m, order, base=None):
    """J-bar_{a,m} = j(-q^a; q^m)."""
    b = as_base(m) if base is None else base ** rat(m)
    x = -(qpow(a) if base is None else base ** rat(a))
    return jacobi_theta(x, b, order)


def Jm(m, order, base=None):
    """J_m = (q^m; q^m)_inf, computed as J_{m,3m} (Euler pentagonal series)."""
    m = rat(m)
    return J(m, 3 * m, order, base=base)
