#!/usr/bin/env python3
"""Generate the shipped identity corpus (src/qmock/data/identities.qid).

Identities with free variables are emitted at several generic monomial
specializations.  Within one stanza every exponent shares a single
denominator: products of arguments then stay on a coarse exponent grid,
which keeps exact inversion cheap, while non-integrality of every theta
argument (the actual genericity requirement) is preserved and checked.

Run with --check to verify every stanza while generating (slow but the
authoritative gate: a degenerate specialization shows up as ERROR, a
transcription mistake as FAIL).
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from qmock._rational import RAT
from qmock.dsl import parse_corpus, verify_identity

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "qmock" / "data" / "identities.qid"

STANZAS = []  # (id, anchor, order, lhs, rhs)


def stanza(ident, anchor, order, lhs, rhs):
    STANZAS.append((ident, anchor, order, lhs, rhs))


def fill(template, **subs):
    out = template
    for key, value in subs.items():
        out = out.replace("{" + key + "}", "(" + value + ")")
    return out


def generic(ident, anchor, order, lhs, rhs, specs):
    """Emit one stanza per specialization dict."""
    for k, subs in enumerate(specs, start=1):
        stanza(
            f"{ident}-{k}",
            anchor + " [" + ", ".join(f"{n}={v}" for n, v in subs.items()) + "]",
            order,
            fill(lhs, **subs),
            fill(rhs, **subs),
        )


def qfrac(value):
    """Monomial text q^(p/r) for a rational exponent."""
    value = RAT(value)
    if value.denominator == 1:
        return f"q^{value.numerator}" if value >= 0 else f"q^({value.numerator})"
    return f"q^({value.numerator}/{value.denominator})"


# ---------------------------------------------------------------------------
# named theta products

for ident, anchor, lhs, rhs in [
    ("product-jbar01-half", "j(-1;q) as twice j(-q;q^4)", "JB(0,1)", "2*JB(1,4)"),
    ("product-jbar01", "eta quotient for j(-1;q)", "JB(0,1)", "2*Jm(2)^2/Jm(1)"),
    ("product-jbar12", "eta quotient for j(-q;q^2)", "JB(1,2)", "Jm(2)^5/(Jm(1)^2*Jm(4)^2)"),
    ("product-j12", "eta quotient for j(q;q^2)", "J(1,2)", "Jm(1)^2/Jm(2)"),
    ("product-jbar13", "eta quotient for j(-q;q^3)", "JB(1,3)", "Jm(2)*Jm(3)^2/(Jm(1)*Jm(6))"),
    ("product-j14", "eta quotient for j(q;q^4)", "J(1,4)", "Jm(1)*Jm(4)/Jm(2)"),
    ("product-j16", "eta quotient for j(q;q^6)", "J(1,6)", "Jm(1)*Jm(6)^2/(Jm(2)*Jm(3))"),
    ("product-jbar16", "eta quotient for j(-q;q^6)", "JB(1,6)",
     "Jm(2)^2*Jm(3)*Jm(12)/(Jm(1)*Jm(4)*Jm(6))"),
]:
    stanza(ident, anchor, 100, lhs, rhs)

# ---------------------------------------------------------------------------
# theta toolkit at generic monomials

X1 = [{"x": "q^(2/7)"}, {"x": "-q^(3/5)"}, {"x": "2*q^(4/9)"}]
X1_INT = [{"x": "-q^2"}, {"x": "2*q^3"}, {"x": "q^5/3"}]
XY = [
    {"x": "q^(1/7)", "y": "q^(3/7)"},
    {"x": "-q^(2/5)", "y": "q^(1/5)"},
    {"x": "2*q^(2/9)", "y": "-q^(4/9)"},
]

generic("theta-shift-up2", "theta argument shifted by the squared base", 60,
        "j(q^2*{x},q)", "q^(-1)*{x}^(-2)*j({x},q)", X1)
generic("theta-shift-down", "theta argument shifted down by the base", 60,
        "j(q^(-1)*{x},q)", "-q^(-1)*{x}*j({x},q)", X1)
generic("theta-reflect-base", "theta reflection x -> q/x", 60,
        "j({x},q)", "j(q/{x},q)", X1)
generic("theta-reflect-inverse", "theta reflection x -> 1/x", 60,
        "j({x},q)", "-{x}*j({x}^(-1),q)", X1)
generic("theta-negate-argument", "j(-x) as a quotient of j(x^2) by j(x)", 60,
        "j(-{x},q)", "J(1,2)*j({x}^2,q^2)/j({x},q)", X1)
generic("theta-base-split-2", "base doubling decomposition of the theta product", 60,
        "j({x},q)", "Jm(1)*j({x},q^2)*j(q*{x},q^2)/Jm(2)^2", X1)
generic("theta-base-split-3", "base tripling decomposition of the theta product", 60,
        "j({x},q)", "Jm(1)*j({x},q^3)*j(q*{x},q^3)*j(q^2*{x},q^3)/Jm(3)^3", X1)
generic("theta-negated-base", "theta at base -q as a quotient of base q^2 values", 60,
        "j({x},-q)", "j({x},q^2)*j(-q*{x},q^2)/J(1,4)", X1_INT)
generic("theta-argument-split-2", "two-fold splitting of the theta sum", 60,
        "j({z},q)", "j(-q*{z}^2,q^4) - {z}*j(-q^3*{z}^2,q^4)", [{"z": s["x"]} for s in X1])
generic("theta-argument-split-3", "three-fold splitting of the theta sum", 60,
        "j({z},q)",
        "j(q^3*{z}^3,q^9) - {z}*j(q^6*{z}^3,q^9) + q*{z}^2*j(q^9*{z}^3,q^9)",
        [{"z": s["x"]} for s in X1])
generic("theta-power-2", "j(x^2; q^2) from the two square roots of x^2", 60,
        "j({x}^2,q^2)", "Jm(2)*j({x},q)*j(-{x},q)/Jm(1)^2", X1)
generic("theta-power-4", "j(x^4; q^4) from the four fourth roots of x^4", 60,
        "j({x}^4,q^4)",
        "Jm(4)*j({x},q)*j(i*{x},q)*j(-{x},q)*j(-i*{x},q)/Jm(1)^4", X1)
RIEMANN = [
    {"a": "q^(1/11)", "b": "q^(2/11)", "c": "q^(4/11)", "d": "q^(8/11)"},
    {"a": "q^(1/13)", "b": "-q^(2/13)", "c": "q^(5/13)", "d": "q^(7/13)"},
    {"a": "2*q^(1/9)", "b": "q^(2/9)", "c": "q^(4/9)", "d": "-q^(6/9)"},
]
generic("riemann-relation", "three-term Riemann relation for theta products", 60,
        "j({a}*{c},q)*j({a}/{c},q)*j({b}*{d},q)*j({b}/{d},q)",
        "j({a}*{d},q)*j({a}/{d},q)*j({b}*{c},q)*j({b}/{c},q)"
        " + ({b}/{c})*j({a}*{b},q)*j({a}/{b},q)*j({c}*{d},q)*j({c}/{d},q)",
        RIEMANN)

generic("quintuple-product-sum", "quintuple product: three-term theta sum side", 60,
        "j(q*{x}^3,q^3) + {x}*j(q^2*{x}^3,q^3)",
        "j(-{x},q)*j(q*{x}^2,q^2)/Jm(2)", X1)
generic("quintuple-product-quotient", "quintuple product: quotient side", 60,
        "j(-{x},q)*j(q*{x}^2,q^2)/Jm(2)",
        "Jm(1)*j({x}^2,q)/j({x},q)", X1)
generic("theta-product-doubling", "product of two thetas as base q^2 combination", 60,
        "j({x},q)*j({y},q)",
        "j(-{x}*{y},q^2)*j(-q*{y}/{x},q^2) - {x}*j(-q*{x}*{y},q^2)*j(-{y}/{x},q^2)", XY)
generic("theta-parity-difference", "odd part of the two-theta product", 60,
        "j(-{x},q)*j({y},q) - j({x},q)*j(-{y},q)",
        "2*{x}*j({y}/{x},q^2)*j(q*{x}*{y},q^2)", XY)
generic("theta-parity-sum", "even part of the two-theta product", 60,
        "j(-{x},q)*j({y},q) + j({x},q)*j(-{y},q)",
        "2*j({x}*{y},q^2)*j(q*{y}/{x},q^2)", XY)

# ---------------------------------------------------------------------------
# the four new theta-product identities and their specializations

generic("theta-triple-balance-8", "three-term balance of base q^4 x q^8 products", 60,
        "j(q^2*{x},q^4)*j(q^5*{x},q^8) + (q/{x})*j({x},q^4)*j(q*{x},q^8)",
        "(Jm(1)/Jm(4))*j(-q^3*{x},q^4)*j(q^3*{x},q^8)", X1)
generic("theta-triple-balance-12", "three-term balance of base q^3 x q^6 products", 60,
        "Jm(12)^3*j(q^2*{x},q^3)*j(-q*{x}^2,q^6) + {x}*Jm(12)^3*j(q*{x},q^3)*j(-q^5*{x}^2,q^6)",
        "J(2,12)^2*Jm(4)*j(-{x},q^3)*j(q^3*{x}^2,q^6)", X1)
generic("theta-lattice-8-24", "four-term relation between bases q^8 and q^24", 60,
        "J(12,24)*j(q^4*{z}^4,q^8)",
        "j(q^3*{z}^3,q^6)*j(-q^4*{z}^2,q^8) + q^3*{z}^(-3)*j(q*{z},q^2)*j(-{z}^6,q^24)",
        [{"z": s["x"]} for s in X1])
generic("theta-lattice-2-24", "four-term relation between bases q^8, q^6 and q^24", 60,
        "J(2,8)*j(q^12*{z}^2,q^24) + q^2*j(q*{z},q^8)*j(q^3*{z}^(-1),q^24)"
        " + q^2*j(q*{z}^(-1),q^8)*j(q^3*{z},q^24)",
        "JB(2,8)*j(q^3*{z},q^6)",
        [{"z": s["x"]} for s in X1])

stanza("theta-eval-2-16", "product evaluation with J(2,16)^2", 100,
       "J(3,6)*J(2,16)^2 - J(4,8)*J(3,24)*J(1,8)", "q*J(1,2)*J(2,8)*JB(24,96)")
stanza("theta-eval-6-16", "product evaluation with J(6,16)^2", 100,
       "-J(3,6)*J(6,16)^2 + J(4,8)*J(9,24)*J(3,8)", "q^3*J(1,2)*J(2,8)*JB(24,96)")
stanza("theta-halves-difference", "difference form of the 2,8|4,8 product pair", 100,
       "2*q^2*J(2,16)^2", "JB(2,8)*J(4,8) - J(2,8)*JB(4,8)")
stanza("theta-halves-sum", "sum form of the 2,8|4,8 product pair", 100,
       "2*J(6,16)^2", "JB(2,8)*J(4,8) + J(2,8)*JB(4,8)")

# ---------------------------------------------------------------------------
# Appell-Lerch sum laws

MX = [
    {"x": "q^(1/7)", "z": "q^(3/7)"},
    {"x": "-q^(2/5)", "z": "q^(4/5)"},
    {"x": "2*q^(2/9)", "z": "-q^(5/9)"},
]
generic("appell-z-shift", "Appell-Lerch sum invariance under z -> qz", 40,
        "m({x},q,{z})", "m({x},q,q*{z})", MX)
generic("appell-inversion", "Appell-Lerch inversion x,z -> 1/x,1/z", 40,
        "m({x},q,{z})", "{x}^(-1)*m({x}^(-1),q,{z}^(-1))", MX)
generic("appell-x-shift", "Appell-Lerch recurrence under x -> qx", 40,
        "m(q*{x},q,{z})", "1 - {x}*m({x},q,{z})", MX)
generic("appell-x-shift-down", "Appell-Lerch recurrence solved for the lower x", 40,
        "m({x},q,{z})", "1 - q^(-1)*{x}*m(q^(-1)*{x},q,{z})", MX)
generic("appell-x-shift-up", "Appell-Lerch recurrence solved for the upper x", 40,
        "m({x},q,{z})", "{x}^(-1) - {x}^(-1)*m(q*{x},q,{z})", MX)

MCHANGE = [
    {"x": "q^(1/7)", "z1": "q^(2/7)", "z0": "q^(3/7)"},
    {"x": "q^(2/5)", "z1": "q^(4/5)", "z0": "-q^(1/5)"},
    {"x": "2*q^(2/9)", "z1": "q^(4/9)", "z0": "q^(7/9)"},
]
generic("appell-change-z", "theta quotient for changing the Appell-Lerch z", 40,
        "m({x},q,{z1}) - m({x},q,{z0})",
        "{z0}*Jm(1)^3*j({z1}/{z0},q)*j({x}*{z0}*{z1},q)"
        "/(j({z0},q)*j({z1},q)*j({x}*{z0},q)*j({x}*{z1},q))", MCHANGE)

MSPLIT = [
    {"x": "q^(1/7)", "z": "q^(2/7)", "zp": "q^(3/7)"},
    {"x": "q^(2/5)", "z": "-q^(1/5)", "zp": "q^(4/5)"},
    {"x": "2*q^(2/9)", "z": "q^(4/9)", "zp": "-q^(7/9)"},
]
generic("appell-split-2-zprime", "two-term split of m into level-4 sums, free z'", 40,
        "m({x},q,{z})",
        "m(-q*{x}^2,q^4,{zp}) - q^(-1)*{x}*m(-q^(-1)*{x}^2,q^4,{zp})"
        " + {zp}*Jm(2)^3/(j({x}*{z},q)*j({zp},q^4))"
        " * ( j(-q*{x}^2*{z}*{zp},q^2)*j({z}^2/{zp},q^4)/(j(-q*{x}^2*{zp},q^2)*j({z},q^2))"
        " - {x}*{z}*j(-q^2*{x}^2*{z}*{zp},q^2)*j(q^2*{z}^2/{zp},q^4)"
        "/(j(-q*{x}^2*{zp},q^2)*j(q*{z},q^2)) )", MSPLIT)
generic("appell-split-2-minus1", "two-term split of m into level-4 sums at z' = -1", 40,
        "m({x},q,{z})",
        "m(-q*{x}^2,q^4,-1) - q^(-1)*{x}*m(-q^(-1)*{x}^2,q^4,-1)"
        " - Jm(2)^3/(j({x}*{z},q)*j(q*{x}^2,q^2)*JB(0,4))"
        " * ( j(q*{x}^2*{z},q^2)*j(-{z}^2,q^4)/j({z},q^2)"
        " - {x}*{z}*j(q^2*{x}^2*{z},q^2)*j(-q^2*{z}^2,q^4)/j(q*{z},q^2) )", MSPLIT)

GX = [{"x": "q^(1/7)"}, {"x": "-q^(2/5)"}, {"x": "2*q^(4/9)"}]
GXZ = [
    {"x": "q^(1/7)", "z": "q^(2/7)"},
    {"x": "-q^(2/5)", "z": "q^(3/5)"},
    {"x": "2*q^(4/9)", "z": "q^(2/9)"},
]
generic("universal-g-free-z", "universal mock theta from two m's with a free z", 40,
        "g({x},q)",
        "-{x}^(-2)*m(q*{x}^(-3),q^3,{x}^3*{z}) - {x}^(-1)*m(q^2*{x}^(-3),q^3,{x}^3*{z})"
        " + Jm(1)^2*j({x}*{z},q)*j({z},q^3)/(j({x},q)*j({z},q)*j({x}^3*{z},q^3))", GXZ)
generic("universal-g-cube-z", "universal mock theta from two m's at z = x^3", 40,
        "g({x},q)",
        "-{x}^(-1)*m(q^2*{x}^(-3),q^3,{x}^3) - {x}^(-2)*m(q*{x}^(-3),q^3,{x}^3)"
        " + Jm(3)^3/(Jm(1)*j({x}^3,q^3))", GX)
generic("universal-g-square-z", "universal mock theta from two m's at z = x^2", 40,
        "g({x},q)",
        "-{x}^(-1)*m(q^2*{x}^(-3),q^3,{x}^2) - {x}^(-2)*m(q*{x}^(-3),q^3,{x}^2)", GX)
generic("universal-g-base4-split", "splitting g into two base q^4 copies", 40,
        "g({x},q)",
        "-{x}^(-1) + q*{x}^(-3)*g(-q*{x}^(-2),q^4) - q*g(-q*{x}^2,q^4)"
        " + Jm(2)*J(2,4)^2/({x}*j({x},q)*j(-q*{x}^2,q^2))", GX)
generic("universal-g-even-combination", "even combination g(x) + g(-x)", 40,
        "g({x},q) + g(-{x},q)",
        "-2*q*g(-q*{x}^2,q^4) + 2*Jm(2)*JB(1,4)^2/(j(-q*{x}^2,q^4)*j({x}^2,q^2))", GX)
generic("universal-g-odd-combination", "odd combination g(x) - g(-x)", 40,
        "g({x},q) - g(-{x},q)",
        "-2*{x}^(-1) + 2*q*{x}^(-3)*g(-q*{x}^(-2),q^4)"
        " + 2*Jm(2)*JB(1,4)^2/({x}*j(-q^3*{x}^2,q^4)*j({x}^2,q^2))", GX)
generic("universal-g-inversion", "invariance of g under x -> q/x", 40,
        "g({x},q)", "g(q/{x},q)", GX)

# ---------------------------------------------------------------------------
# structure theorems: double sum = theta-times-m block + theta quotient block

SXY = [
    {"x": "q^(1/7)", "y": "q^(3/7)"},
    {"x": "-q^(2/5)", "y": "2*q^(4/5)"},
]
for (n, p, b) in [(1, 2, 3), (3, 2, 5), (1, 3, 4)]:
    generic(
        f"double-sum-block-{n}-{p}",
        f"f_(n,n+p,n) as m-block plus theta block at (n,p)=({n},{p})",
        25,
        f"f({n},{b},{n},{{x}},{{y}},q)",
        f"g_abc({n},{b},{n},{{x}},{{y}},q,-1,-1) + theta_np({n},{p},{{x}},{{y}},q)",
        SXY,
    )
stanza(
    "double-sum-block-3-2-fractional",
    "f_(3,5,3) block decomposition at a negated fractional base",
    30,
    "f(3,5,3,q^(5/4),-q^(5/4),-q^(1/2))",
    "g_abc(3,5,3,q^(5/4),-q^(5/4),-q^(1/2),-1,-1)"
    " + theta_np(3,2,q^(5/4),-q^(5/4),-q^(1/2))",
)

for (a, b, c) in [(4, 4, 1), (1, 2, 1), (2, 2, 1)]:
    d1 = b * b // a - c
    d2 = b * b // c - a
    generic(
        f"double-sum-twoterm-{a}-{b}-{c}",
        f"f as two-term m-block minus theta quotient at (a,b,c)=({a},{b},{c})",
        25,
        f"f({a},{b},{c},{{x}},{{y}},q)",
        f"h_abc({a},{b},{c},{{x}},{{y}},q,-1,-1)"
        f" - theta_abc({a},{b},{c},{{x}},{{y}},q)/(JB(0,{d1})*JB(0,{d2}))",
        SXY,
    )

stanza(
    "double-sum-twoterm-expanded-phi-point",
    "the (4,4,1) decomposition with its theta quotients written out, phi point",
    25,
    "f(4,4,1,q^3,-q^2,q)",
    "h_abc(4,4,1,q^3,-q^2,q,-1,-1)"
    " - ( j(-q^5,q^4)*j(q^10,q^12)*Jm(12)^3*j(q^3,q^12)/(j(-q,q^12)*j(-q^2,q^12))"
    " + q^3*j(-q^8,q^4)*j(q^7,q^12)*Jm(12)^3*j(q^6,q^12)/(j(-q,q^12)*j(-q^5,q^12))"
    " + q^9*j(-q^11,q^4)*j(q^4,q^12)*Jm(12)^3*j(q^9,q^12)/(j(-q,q^12)*j(-q^8,q^12))"
    " + q^18*j(-q^14,q^4)*j(q,q^12)*Jm(12)^3*j(q^12,q^12)/(j(-q,q^12)*j(-q^11,q^12)) )"
    "/(JB(0,3)*JB(0,12))",
)
stanza(
    "double-sum-twoterm-expanded-nu-point",
    "the (4,4,1) decomposition with its theta quotients written out, nu point",
    25,
    "f(4,4,1,q^4,-q^3,q)",
    "h_abc(4,4,1,q^4,-q^3,q,-1,-1)"
    " - ( j(-q^6,q^4)*j(q^10,q^12)*Jm(12)^3*j(1,q^12)/(j(-q^(-2),q^12)*j(-q^2,q^12))"
    " + q^3*j(-q^9,q^4)*j(q^7,q^12)*Jm(12)^3*j(q^3,q^12)/(j(-q^(-2),q^12)*j(-q^5,q^12))"
    " + q^9*j(-q^12,q^4)*j(q^4,q^12)*Jm(12)^3*j(q^6,q^12)/(j(-q^(-2),q^12)*j(-q^8,q^12))"
    " + q^18*j(-q^15,q^4)*j(q,q^12)*Jm(12)^3*j(q^9,q^12)/(j(-q^(-2),q^12)*j(-q^11,q^12)) )"
    "/(JB(0,3)*JB(0,12))",
)

CORXY = [(RAT(2, 7), RAT(3, 7)), (RAT(2, 9), RAT(5, 9))]
for k, (ax, ay) in enumerate(CORXY, start=1):
    x, y = qfrac(ax), qfrac(ay)
    subs = {
        "x": x, "y": y,
        "hxhy": qfrac((ax + ay) / 2),           # x^(1/2) y^(1/2)
        "x52y32": qfrac(5 * ax / 2 - 3 * ay / 2),  # x^(5/2)/y^(3/2)
        "y52x32": qfrac(5 * ay / 2 - 3 * ax / 2),
        "y32x32": qfrac(3 * ay / 2 - 3 * ax / 2),
    }
    stanza(
        f"theta-block-3-2-halves-{k}",
        f"half-power product form of the (3,2) theta block [x={x}, y={y}]",
        25,
        fill("theta_np(3,2,{x},{y},q)", **subs),
        fill(
            "{hxhy}*q^(-11/2)*j(q^5*{x}*{y},q^8)*JB(8,32)"
            "/(2*JB(0,48)*j(q^5*{y}^5/{x}^3,q^16)*j(q^5*{x}^5/{y}^3,q^16))"
            " * ( j(-q^(5/2)*{x52y32},q^8)*j(-q^(5/2)*{y52x32},q^8)*j(q^(3/2)*{y32x32},q^3)"
            " - j(q^(5/2)*{x52y32},q^8)*j(q^(5/2)*{y52x32},q^8)*j(-q^(3/2)*{y32x32},q^3) )",
            **subs,
        ),
    )

# ---------------------------------------------------------------------------
# third-order mock theta functions: all displayed alternate forms

for ident, anchor, order, lhs, rhs in [
    ("psi-universal-g", "third-order psi from the universal mock theta", 80,
     "psi(q)", "q*g(q,q^4)"),
    ("psi-appell-12", "third-order psi from two level q^12 Appell-Lerch sums", 80,
     "psi(q)", "-q^(-1)*m(q,q^12,q^2) - m(q^5,q^12,q^2)"),
    ("psi-appell-negated", "third-order psi from one m at the negated cubed base", 80,
     "psi(q)", "-m(q,-q^3,-q) + q*Jm(12)^3/(Jm(4)*J(3,12))"),
    ("nu-universal-g", "third-order nu as g at i times the square root of q", 80,
     "nu(q)", "g(i*q^(1/2),q)"),
    ("nu-appell-12-pair", "third-order nu from two level q^12 Appell-Lerch sums", 80,
     "nu(q)", "q^(-1)*m(q^2,q^12,-q^3) + q^(-1)*m(q^2,q^12,-q^9)"),
    ("nu-appell-12-single", "third-order nu from one m plus a theta quotient", 80,
     "nu(q)", "2*q^(-1)*m(q^2,q^12,-q^3) + Jm(1)*J(3,12)/Jm(2)"),
    ("phi-universal-g", "third-order phi from g at the imaginary unit", 80,
     "phi(q)", "(1-i)*(1+i*g(i,q))"),
    ("phi-appell-12", "third-order phi from four level q^12 Appell-Lerch sums", 80,
     "phi(q)",
     "m(q^5,q^12,q^4) + m(q^5,q^12,q^8) + q^(-1)*m(q,q^12,q^4) + q^(-1)*m(q,q^12,q^8)"),
    ("phi-appell-negated", "third-order phi from one m at the negated cubed base", 80,
     "phi(q)", "2*m(q,-q^3,-1) + 2*q*Jm(12)^3/(Jm(4)*J(3,12))"),
]:
    stanza(ident, anchor, order, lhs, rhs)

# ---------------------------------------------------------------------------
# the new mock theta functions in terms of g, their pair relations, parity

for ident, anchor, order, lhs, rhs in [
    ("psibar0-universal-g", "psibar0 from g at -q on base q^8", 100,
     "psibar0(q)", "2 - 2*q*g(-q,q^8) - J(1,2)*JB(3,8)/Jm(2)"),
    ("psibar1-universal-g", "psibar1 from g at -q^3 on base q^8", 100,
     "psibar1(q)", "2*q^2*g(-q^3,q^8) + J(1,2)*JB(1,8)/Jm(2)"),
    ("phibar0-universal-g", "phibar0 from g at -q on base q^8", 100,
     "q*phibar0(q)", "-1 + q*g(-q,q^8) + JB(2,4)*JB(3,8)/Jm(2)"),
    ("phibar1-universal-g", "phibar1 from g at -q^3 on base q^8", 100,
     "phibar1(q)", "-q^2*g(-q^3,q^8) + JB(2,4)*JB(1,8)/Jm(2)"),
    ("mock-pair-even", "psibar0 + 2q phibar0 collapses to a theta quotient", 100,
     "psibar0(q) + 2*q*phibar0(q)", "-(JB(3,8)/Jm(2))*(J(1,2)-2*JB(2,4))"),
    ("mock-pair-odd", "psibar1 + 2 phibar1 collapses to a theta quotient", 100,
     "psibar1(q) + 2*phibar1(q)", "(JB(1,8)/Jm(2))*(J(1,2)+2*JB(2,4))"),
    ("phi-parity-even", "even part of third-order phi", 100,
     "2*psibar0(q^2)", "phi(q) + phi(-q)"),
    ("phi-parity-odd", "odd part of third-order phi", 100,
     "2*q*psibar1(q^2)", "phi(q) - phi(-q)"),
    ("psi-parity-even", "even part of third-order psi", 100,
     "2*q^2*phibar0(q^2)", "psi(q) + psi(-q)"),
    ("psi-parity-odd", "odd part of third-order psi", 100,
     "2*q*phibar1(q^2)", "psi(q) - psi(-q)"),
    ("phibar0-g-doubling", "doubled phibar0 from g on base q^16", 100,
     "2*q^2*phibar0(q^2)",
     "-2 + 2*q^2*g(-q^2,q^16) + 2*Jm(8)*JB(4,16)^2/(J(2,8)*JB(14,16))"),
]:
    stanza(ident, anchor, order, lhs, rhs)

# ---------------------------------------------------------------------------
# Hecke-type double sum forms

for ident, anchor, order, lhs, rhs in [
    ("psi-hecke-pair", "Hecke double sum pair for 1 + 2 psi", 100,
     "1 + 2*psi(q)", "(f(3,5,3,q^2,q^3,q) - q^3*f(3,5,3,q^6,q^7,q))/Jm(1)"),
    ("psi-hecke-single", "single Hecke double sum for 1 + 2 psi", 100,
     "1 + 2*psi(q)", "(2*f(3,5,3,q^2,q^3,q) - Jm(1))/Jm(1)"),
    ("psi-hecke-product", "f_(3,5,3) at (q^2, q^3) as a product with 1 + psi", 100,
     "f(3,5,3,q^2,q^3,q)", "Jm(1)*(1+psi(q))"),
    ("nu-negated-hecke", "Hecke double sum pair for nu at -q", 100,
     "nu(-q)", "(f(3,5,3,q^3,q^4,q) - q^4*f(3,5,3,q^7,q^8,q))/(2*Jm(1))"),
    ("psibar0-hecke", "Hecke double sum pair for psibar0", 100,
     "psibar0(q)", "(f(3,5,3,q^4,q^4,q^2) + q^5*f(3,5,3,q^12,q^12,q^2))/Jm(2)"),
    ("psibar0-hecke-fold", "folding the psibar0 pair into one fractional double sum", 100,
     "f(3,5,3,q^4,q^4,q^2) + q^5*f(3,5,3,q^12,q^12,q^2)",
     "f(3,5,3,q^(5/4),-q^(5/4),-q^(1/2))"),
    ("psibar1-hecke", "fractional-base Hecke double sum for psibar1", 100,
     "psibar1(q)", "f(3,5,3,q^(9/4),-q^(9/4),-q^(1/2))/Jm(2)"),
    ("theta-square-hecke", "theta square as a difference of two double sums", 100,
     "Jm(1)^2", "f(1,7,1,q,q^2,q) - q*f(1,7,1,q^3,q^4,q)"),
    ("phi-hecke", "Hecke double sum pair for theta times phi", 100,
     "JB(1,4)*phi(q)", "f(4,4,1,q^3,-q^2,q) + q*f(4,4,1,q^5,-q^4,q)"),
    ("nu-hecke", "single Hecke double sum for theta times nu", 100,
     "JB(1,4)*nu(q)", "f(4,4,1,q^4,-q^3,q)"),
    ("phibar0-hecke", "Hecke double sum pair for theta times phibar0", 100,
     "J(1,2)*phibar0(q)", "f(1,7,1,q^3,q^13,q^2) - q^2*f(1,7,1,q^9,q^7,q^2)"),
    ("phibar1-hecke", "Hecke double sum pair for theta times phibar1", 100,
     "J(1,2)*phibar1(q)", "f(1,7,1,q^3,q^5,q^2) + q^7*f(1,7,1,q^11,q^13,q^2)"),
]:
    stanza(ident, anchor, order, lhs, rhs)

# ---------------------------------------------------------------------------
# two-term block evaluations and end-of-proof checkpoints

for ident, anchor, order, lhs, rhs in [
    ("twoterm-block-phi-combo", "two-term m-blocks combine for the phi pair", 40,
     "h_abc(4,4,1,q^3,-q^2,q,-1,-1) + q*h_abc(4,4,1,q^5,-q^4,q,-1,-1)",
     "2*JB(1,4)*m(q^5,q^12,-1) + 2*q^(-1)*JB(1,4)*m(q,q^12,-1)"),
    ("twoterm-block-nu-single", "two-term m-block collapses for the nu point", 40,
     "h_abc(4,4,1,q^4,-q^3,q,-1,-1)", "2*q^(-1)*JB(1,4)*m(q^2,q^12,-1)"),
    ("m-block-3-5-3-expansion", "the six theta-times-m terms of the (3,5,3) block", 40,
     "g_abc(3,5,3,q^2,q^3,q,-1,-1)",
     "j(q^2,q^3)*m(-q^26,q^48,-1) + j(q^3,q^3)*m(-q^18,q^48,-1)"
     " - q^3*j(q^7,q^3)*m(-q^10,q^48,-1) - q^2*j(q^8,q^3)*m(-q^2,q^48,-1)"
     " + q^9*j(q^12,q^3)*m(-q^(-6),q^48,-1) + q^7*j(q^13,q^3)*m(-q^(-14),q^48,-1)"),
    ("m-block-psi-final", "the (3,5,3) m-block evaluates to J1(1+psi) minus a quotient", 50,
     "g_abc(3,5,3,q^2,q^3,q,-1,-1)",
     "Jm(1)*(1+psi(q))"
     " - q^(-5)*Jm(1)*Jm(24)*Jm(8)*Jm(12)*JB(4,12)/(JB(0,48)*J(2,12)*J(3,12))"),
    ("theta-block-psi-final", "the (3,2) theta block at the psi point", 50,
     "theta_np(3,2,q^2,q^3,q)",
     "q^(-5)*J(2,8)*Jm(16)^2*J(3,8)*J(7,8)*JB(0,3)"
     "/(2*JB(0,48)*J(2,16)*J(6,16)*Jm(8))"),
    ("theta-quotient-match-psi", "the two psi-point theta quotients agree", 60,
     "q^(-5)*Jm(1)*Jm(24)*Jm(8)*Jm(12)*JB(4,12)/(JB(0,48)*J(2,12)*J(3,12))",
     "q^(-5)*J(2,8)*Jm(16)^2*J(3,8)*J(7,8)*JB(0,3)"
     "/(2*JB(0,48)*J(2,16)*J(6,16)*Jm(8))"),
    ("theta-quotient-match-psibar0", "the two psibar0 theta quotients agree", 60,
     "2*q^(-1)*Jm(8)^2*JB(2,8)*J(3,24)/(JB(1,8)*J(3,8)*JB(0,24))"
     " - 2*q^(-1)*J(3,6)*Jm(16)*Jm(8)*J(2,16)/(JB(0,24)*J(5,8)*Jm(2))",
     "-J(1,2)*JB(3,8)/Jm(2)"),
]:
    stanza(ident, anchor, order, lhs, rhs)


# ---------------------------------------------------------------------------

def render():
    lines = [
        "# Shipped identity corpus for the qmock verifier.",
        "# One stanza per identity; identities with free variables appear at",
        "# several generic specializations (noted in the anchor).",
        "",
    ]
    for ident, anchor, order, lhs, rhs in STANZAS:
        lines.append(f"[identity {ident}]")
        lines.append(f'anchor = "{anchor}"')
        lines.append(f"order = {order}")
        lines.append(f"lhs = {lhs}")
        lines.append(f"rhs = {rhs}")
        lines.append("")
    return "\n".join(lines)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true", help="verify every stanza")
    ap.add_argument("--only", help="check only ids containing this substring")
    args = ap.parse_args()

    text = render()
    records = parse_corpus(text)
    print(f"{len(records)} stanzas")
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(text, encoding="utf-8")
    print(f"wrote {OUT}")

    if args.check or args.only:
        bad = 0
        total = 0.0
        for rec in records:
            if args.only and args.only not in rec.id:
                continue
            t0 = time.perf_counter()
            rep = verify_identity(rec)
            dt = time.perf_counter() - t0
            total += dt
            mark = "" if rep.status == "PASS" else "   <<<<<<"
            print(f"{rep.status:<6} {rec.id:<38} {dt:7.2f}s{mark}", flush=True)
            if rep.status != "PASS":
                bad += 1
                if rep.status == "FAIL":
                    e, c = rep.first_mismatch
                    print(f"       first mismatch at q^{e}: {c}")
                else:
                    print(f"       {rep.detail}")
        print(f"total check time: {total:.1f}s; non-passing: {bad}")
        return 1 if bad else 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
