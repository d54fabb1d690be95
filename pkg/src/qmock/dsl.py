"""Expression language for identities-as-data.

Grammar (standard precedence, tightest last):

    expr    :=  term (('+' | '-') term)*
    term    :=  factor (('*' | '/') factor | factor)*        # juxtaposition = *
    factor  :=  '-' factor | power
    power   :=  atom ['^' exponent]
    atom    :=  INT | 'i' | 'q' | NAME '(' expr (',' expr)* ')' | '(' expr ')'
    exponent := ['-'] INT | '(' ['-'] INT ['/' INT] ')'

Rationals are written p/r, the imaginary unit is ``i``, and fractional
powers are restricted to the formal variable: q^(p/r).  Implicit
multiplication by juxtaposition (``2q^2 J(1,2)``) matches mathematical
habit in corpus files.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from ._rational import rat, is_integer, as_int, num_den
from . import appell, catalog, hecke, theta
from .series import (
    GaussianRational,
    GR_I,
    InsufficientPrecision,
    NonPositivePower,
    QMonomial,
    QSeries,
    QSeriesError,
    qpow,
)

__all__ = [
    "parse",
    "to_text",
    "evaluate",
    "verify_identity",
    "parse_corpus",
    "IdentityRecord",
    "VerificationReport",
    "ExpressionSyntaxError",
    "UnknownFunction",
    "ArityError",
    "EvaluationError",
    "CorpusSyntaxError",
    "Literal",
    "QPow",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "Neg",
    "Pow",
    "Call",
]


# --------------------------------------------------------------------------
# errors

class ExpressionSyntaxError(QSeriesError):
    def __init__(self, message, line=1, col=1, expected=()):
        self.line = line
        self.col = col
        self.expected = tuple(expected)
        hint = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"line {line}, column {col}: {message}{hint}")


class UnknownFunction(ExpressionSyntaxError):
    pass


class ArityError(ExpressionSyntaxError):
    pass


class EvaluationError(QSeriesError):
    """An expression is structurally valid but not evaluable (bad argument kind)."""


class CorpusSyntaxError(QSeriesError):
    def __init__(self, message, line):
        self.line = line
        super().__init__(f"corpus line {line}: {message}")


# --------------------------------------------------------------------------
# AST

@dataclass(frozen=True)
class Literal:
    value: GaussianRational


@dataclass(frozen=True)
class QPow:
    exponent: object  # rational


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


# argument slot kinds: m = monomial, r = rational, n = integer, e = expression
FUNCTIONS = {
    "poch_inf": "mm",
    "poch_fin": "mmn",
    "j": "mm",
    "J": "rr",
    "JB": "rr",
    "Jm": "r",
    "m": "mmm",
    "f": "nnnmmm",
    "g": "mm",
    "g_abc": "nnnmmmmm",
    "h_abc": "nnnmmmmm",
    "theta_np": "nnmmm",
    "theta_abc": "nnnmmm",
    "psi": "m",
    "nu": "m",
    "phi": "m",
    "psibar0": "m",
    "psibar1": "m",
    "phibar0": "m",
    "phibar1": "m",
    "subq": "er",
    "negq": "e",
}


# --------------------------------------------------------------------------
# tokenizer

_SYMBOLS = "+-*/^(),"


@dataclass(frozen=True)
class _Token:
    kind: str  # NUM, NAME, one of _SYMBOLS, EOF
    text: str
    line: int
    col: int


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("NUM", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ExpressionSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


# --------------------------------------------------------------------------
# parser

_ATOM_START = ("NUM", "NAME", "(")


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok.kind != kind:
            raise ExpressionSyntaxError(
                f"unexpected {tok.text or 'end of input'!r}",
                tok.line,
                tok.col,
                expected=(kind,),
            )
        return self.next()

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "EOF":
            raise ExpressionSyntaxError(
                f"trailing input {tok.text!r}", tok.line, tok.col, expected=("EOF",)
            )
        return node

    def expr(self):
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while True:
            kind = self.peek().kind
            if kind == "*":
                self.next()
                node = Mul(node, self.factor())
            elif kind == "/":
                self.next()
                node = Div(node, self.factor())
            elif kind in _ATOM_START:
                node = Mul(node, self.factor())  # juxtaposition
            else:
                return node

    def factor(self):
        if self.peek().kind == "-":
            self.next()
            return Neg(self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().kind != "^":
            return base
        caret = self.next()
        k = self.exponent()
        if isinstance(base, QPow):
            return QPow(base.exponent * k)
        if not is_integer(k):
            raise ExpressionSyntaxError(
                "fractional powers are allowed only on q",
                caret.line,
                caret.col,
            )
        return Pow(base, as_int(k))

    def exponent(self):
        if self.peek().kind == "(":
            self.next()
            value = self.signed_rational()
            self.expect(")")
            return value
        return self.signed_rational(paren=False)

    def signed_rational(self, paren=True):
        sign = 1
        if self.peek().kind == "-":
            self.next()
            sign = -1
        num = self.expect("NUM")
        value = rat(int(num.text))
        if paren and self.peek().kind == "/":
            self.next()
            den = self.expect("NUM")
            if int(den.text) == 0:
                raise ExpressionSyntaxError("zero denominator", den.line, den.col)
            value = value / int(den.text)
        return sign * value

    def atom(self):
        tok = self.peek()
        if tok.kind == "NUM":
            self.next()
            return Literal(GaussianRational(int(tok.text)))
        if tok.kind == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "NAME":
            self.next()
            if tok.text == "q":
                return QPow(rat(1))
            if tok.text == "i":
                return Literal(GR_I)
            if tok.text in FUNCTIONS:
                if self.peek().kind != "(":
                    raise ExpressionSyntaxError(
                        f"function {tok.text!r} needs an argument list",
                        tok.line,
                        tok.col,
                        expected=("(",),
                    )
                self.next()
                args = [self.expr()]
                while self.peek().kind == ",":
                    self.next()
                    args.append(self.expr())
                self.expect(")")
                want = len(FUNCTIONS[tok.text])
                if len(args) != want:
                    raise ArityError(
                        f"{tok.text} takes {want} arguments, got {len(args)}",
                        tok.line,
                        tok.col,
                    )
                return Call(tok.text, tuple(args))
            raise UnknownFunction(f"unknown name {tok.text!r}", tok.line, tok.col)
        raise ExpressionSyntaxError(
            f"unexpected {tok.text or 'end of input'!r}",
            tok.line,
            tok.col,
            expected=_ATOM_START,
        )


def parse(text):
    """Parse an expression into its AST."""
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# printer (canonical, reparseable)

def _rat_text(value):
    if is_integer(value):
        return str(value)
    return f"{value.numerator}/{value.denominator}"


def _literal_text(value):
    """A parseable rendering of any constant; Literal-shaped only for the
    constants the parser itself can produce (nonnegative integers and i)."""
    if not value.im:
        r = value.re
        if r >= 0:
            return _rat_text(r) if is_integer(r) else f"({_rat_text(r)})"
        return f"(-{_literal_text(GaussianRational(-r))})"
    if value == GR_I:
        return "i"
    re_part = _literal_text(GaussianRational(value.re)) if value.re else ""
    im_unit = _literal_text(GaussianRational(abs(value.im)))
    im_part = "i" if abs(value.im) == 1 else f"{im_unit}*i"
    sign = "-" if value.im < 0 else ("+" if re_part else "")
    return f"({re_part} {sign} {im_part})" if re_part else f"({sign}{im_part})"


def to_text(node):
    """Canonical text for an AST; parse(to_text(x)) is structurally x for
    every AST the parser itself can produce."""
    if isinstance(node, Literal):
        return _literal_text(node.value)
    if isinstance(node, QPow):
        e = node.exponent
        if e == 1:
            return "q"
        if is_integer(e) and e >= 0:
            return f"q^{e}"
        return f"q^({_rat_text(e)})"
    if isinstance(node, Add):
        return f"({to_text(node.left)} + {to_text(node.right)})"
    if isinstance(node, Sub):
        return f"({to_text(node.left)} - {to_text(node.right)})"
    if isinstance(node, Mul):
        return f"({to_text(node.left)}*{to_text(node.right)})"
    if isinstance(node, Div):
        return f"({to_text(node.left)}/{to_text(node.right)})"
    if isinstance(node, Neg):
        return f"(-{to_text(node.operand)})"
    if isinstance(node, Pow):
        k = node.exponent
        suffix = f"^{k}" if k >= 0 else f"^(-{-k})"
        return f"{to_text(node.base)}{suffix}"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_text(a) for a in node.args)})"
    raise TypeError(f"not an AST node: {node!r}")


# --------------------------------------------------------------------------
# constant folding for argument slots

def _fold_monomial(node):
    if isinstance(node, Literal):
        if node.value.is_zero():
            raise EvaluationError("monomial argument must be nonzero")
        return QMonomial(node.value, 0)
    if isinstance(node, QPow):
        return qpow(node.exponent)
    if isinstance(node, Neg):
        return -_fold_monomial(node.operand)
    if isinstance(node, Mul):
        return _fold_monomial(node.left) * _fold_monomial(node.right)
    if isinstance(node, Div):
        return _fold_monomial(node.left) * _fold_monomial(node.right).inverse()
    if isinstance(node, Pow):
        return _fold_monomial(node.base) ** node.exponent
    raise EvaluationError(
        f"expected a constant monomial (c*q^e), got expression {to_text(node)!r}"
    )


def _fold_const(node):
    """Constant value of a q-free subexpression (zero allowed)."""
    if isinstance(node, Literal):
        return node.value
    if isinstance(node, Neg):
        return -_fold_const(node.operand)
    if isinstance(node, Mul):
        return _fold_const(node.left) * _fold_const(node.right)
    if isinstance(node, Div):
        return _fold_const(node.left) / _fold_const(node.right)
    if isinstance(node, Pow):
        return _fold_const(node.base) ** node.exponent
    raise EvaluationError(f"expected a constant, got expression {to_text(node)!r}")


def _fold_rational(node):
    value = _fold_const(node)
    if value.im:
        raise EvaluationError(f"expected a rational constant, got {to_text(node)!r}")
    return value.re


def _fold_int(node):
    value = _fold_rational(node)
    if not is_integer(value):
        raise EvaluationError(f"expected an integer, got {to_text(node)!r}")
    return as_int(value)


# --------------------------------------------------------------------------
# evaluation

def _eval(node, w):
    if isinstance(node, Literal):
        return QSeries.constant(node.value)
    if isinstance(node, QPow):
        return QSeries.from_monomial(qpow(node.exponent))
    if isinstance(node, Add):
        return _eval(node.left, w) + _eval(node.right, w)
    if isinstance(node, Sub):
        return _eval(node.left, w) - _eval(node.right, w)
    if isinstance(node, Neg):
        return -_eval(node.operand, w)
    if isinstance(node, Mul):
        return _eval(node.left, w) * _eval(node.right, w)
    if isinstance(node, Div):
        num = _eval(node.left, w)
        den = _eval(node.right, w)
        return num * den.invert(order=w)
    if isinstance(node, Pow):
        base = _eval(node.base, w)
        if node.exponent < 0:
            base = base.invert(order=w)
            return base ** (-node.exponent)
        return base ** node.exponent
    if isinstance(node, Call):
        return _eval_call(node, w)
    raise TypeError(f"not an AST node: {node!r}")


def _require_base(m):
    if m.exp <= 0:
        raise EvaluationError(f"base argument must have positive exponent, got {m}")
    return m


def _eval_call(node, w):
    name = node.name
    a = node.args
    if name == "j":
        return theta.jacobi_theta(_fold_monomial(a[0]), _require_base(_fold_monomial(a[1])), w)
    if name == "J":
        return theta.J(_fold_rational(a[0]), _fold_rational(a[1]), w)
    if name == "JB":
        return theta.Jbar(_fold_rational(a[0]), _fold_rational(a[1]), w)
    if name == "Jm":
        return theta.Jm(_fold_rational(a[0]), w)
    if name == "poch_inf":
        return theta.pochhammer_infinite(
            _fold_monomial(a[0]), _require_base(_fold_monomial(a[1])), w
        )
    if name == "poch_fin":
        return theta.pochhammer_finite(
            _fold_monomial(a[0]), _fold_monomial(a[1]), _fold_int(a[2]), order=w
        )
    if name == "m":
        return appell.appell_m(
            _fold_monomial(a[0]),
            _require_base(_fold_monomial(a[1])),
            _fold_monomial(a[2]),
            w,
        )
    if name == "g":
        return appell.universal_g_eulerian(
            _fold_monomial(a[0]), _require_base(_fold_monomial(a[1])), w
        )
    if name == "f":
        return hecke.f_abc(
            _fold_int(a[0]),
            _fold_int(a[1]),
            _fold_int(a[2]),
            _fold_monomial(a[3]),
            _fold_monomial(a[4]),
            _require_base(_fold_monomial(a[5])),
            w,
        )
    if name in ("g_abc", "h_abc"):
        fn = appell.g_abc if name == "g_abc" else appell.h_abc
        return fn(
            _fold_int(a[0]),
            _fold_int(a[1]),
            _fold_int(a[2]),
            _fold_monomial(a[3]),
            _fold_monomial(a[4]),
            _require_base(_fold_monomial(a[5])),
            _fold_monomial(a[6]),
            _fold_monomial(a[7]),
            w,
        )
    if name == "theta_np":
        return appell.theta_np(
            _fold_int(a[0]),
            _fold_int(a[1]),
            _fold_monomial(a[2]),
            _fold_monomial(a[3]),
            _require_base(_fold_monomial(a[4])),
            w,
        )
    if name == "theta_abc":
        return appell.theta_abc(
            _fold_int(a[0]),
            _fold_int(a[1]),
            _fold_int(a[2]),
            _fold_monomial(a[3]),
            _fold_monomial(a[4]),
            _require_base(_fold_monomial(a[5])),
            w,
        )
    if name in catalog.CATALOG:
        arg = _fold_monomial(a[0])
        if arg.exp <= 0:
            raise EvaluationError(
                f"{name} takes an argument c*q^e with e > 0, got {arg}"
            )
        inner = catalog.CATALOG[name].eulerian(w / arg.exp)
        return inner.substitute_monomial(arg)
    if name == "subq":
        k = _fold_rational(a[1])
        if k <= 0:
            raise NonPositivePower(f"subq power must be positive, got {k}")
        return _eval(a[0], w / k).substitute_power(k)
    if name == "negq":
        return _eval(a[0], w).negate_base()
    raise EvaluationError(f"no evaluator for function {name!r}")


def evaluate(node, order, retries=3):
    """Evaluate to a series with precision >= order, retrying with an
    inflated working order when division or monomial shifts consume some."""
    order = rat(order)
    work = order
    for _ in range(retries + 1):
        value = _eval(node, work)
        if value.precision is None or value.precision >= order:
            return value.truncate(order)
        work = work + (order - value.precision) + 1
    raise InsufficientPrecision(
        f"evaluation stuck below requested precision {order}"
    )


# --------------------------------------------------------------------------
# identity records and verification

@dataclass
class IdentityRecord:
    id: str
    anchor: str
    order: object  # rational
    lhs: object  # AST
    rhs: object  # AST
    lhs_text: str = ""
    rhs_text: str = ""


@dataclass
class VerificationReport:
    id: str
    status: str  # PASS | FAIL | ERROR
    achieved_precision: Optional[object] = None
    first_mismatch: Optional[tuple] = None  # (exponent, coefficient)
    elapsed_ms: float = 0.0
    anchor: str = ""
    detail: str = ""

    def to_dict(self, stable=False):
        d = {
            "id": self.id,
            "status": self.status,
            "achieved_precision": (
                None if self.achieved_precision is None else list(num_den(self.achieved_precision))
            ),
            "first_mismatch": None,
            "anchor": self.anchor,
            "detail": self.detail,
        }
        if self.first_mismatch is not None:
            e, c = self.first_mismatch
            d["first_mismatch"] = {
                "exponent": list(num_den(e)),
                "coefficient": list(num_den(c.re) + num_den(c.im)),
            }
        if not stable:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d


def verify_identity(record):
    """Evaluate lhs - rhs; PASS iff every coefficient below the achieved
    precision is exactly zero.  Domain errors become ERROR reports."""
    start = time.perf_counter()
    try:
        diff = evaluate(Sub(record.lhs, record.rhs), record.order)
    except (QSeriesError, ValueError, ZeroDivisionError, OverflowError) as exc:
        return VerificationReport(
            id=record.id,
            status="ERROR",
            anchor=record.anchor,
            detail=f"{type(exc).__name__}: {exc}",
            elapsed_ms=(time.perf_counter() - start) * 1000,
        )
    elapsed = (time.perf_counter() - start) * 1000
    if diff.is_zero():
        return VerificationReport(
            id=record.id,
            status="PASS",
            achieved_precision=diff.precision,
            anchor=record.anchor,
            elapsed_ms=elapsed,
        )
    e = min(diff.terms)
    return VerificationReport(
        id=record.id,
        status="FAIL",
        achieved_precision=diff.precision,
        first_mismatch=(e, diff.terms[e]),
        anchor=record.anchor,
        elapsed_ms=elapsed,
    )


# --------------------------------------------------------------------------
# corpus file format

def parse_corpus(text):
    """Parse a corpus file: blank-line separated stanzas of

        [identity <id>]
        anchor = "<citation>"
        order = <rational>
        lhs = <expression>
        rhs = <expression>

    Lines beginning with ``#`` are comments."""
    records = []
    seen = set()
    current = None
    current_line = 0

    def finish():
        nonlocal current
        if current is None:
            return
        for key in ("anchor", "order", "lhs", "rhs"):
            if key not in current:
                raise CorpusSyntaxError(
                    f"identity {current['id']!r} is missing {key!r}", current_line
                )
        try:
            lhs = parse(current["lhs"])
            rhs = parse(current["rhs"])
        except ExpressionSyntaxError as exc:
            raise CorpusSyntaxError(
                f"identity {current['id']!r}: {exc}", current_line
            ) from exc
        records.append(
            IdentityRecord(
                id=current["id"],
                anchor=current["anchor"],
                order=current["order"],
                lhs=lhs,
                rhs=rhs,
                lhs_text=current["lhs"],
                rhs_text=current["rhs"],
            )
        )
        current = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            continue
        if line.startswith("[identity"):
            finish()
            if not line.endswith("]"):
                raise CorpusSyntaxError("malformed [identity ...] header", lineno)
            ident = line[len("[identity"):-1].strip()
            if not ident:
                raise CorpusSyntaxError("empty identity id", lineno)
            if ident in seen:
                raise CorpusSyntaxError(f"duplicate identity id {ident!r}", lineno)
            seen.add(ident)
            current = {"id": ident}
            current_line = lineno
            continue
        if current is None:
            raise CorpusSyntaxError(f"content outside a stanza: {line!r}", lineno)
        if "=" not in line:
            raise CorpusSyntaxError(f"expected key = value, got {line!r}", lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "anchor":
            if len(value) < 2 or value[0] != '"' or value[-1] != '"':
                raise CorpusSyntaxError("anchor must be a quoted string", lineno)
            current["anchor"] = value[1:-1]
        elif key == "order":
            try:
                if "/" in value:
                    p, _, r = value.partition("/")
                    order = rat(int(p), int(r))
                else:
                    order = rat(int(value))
            except (ValueError, ZeroDivisionError) as exc:
                raise CorpusSyntaxError(f"bad order {value!r}", lineno) from exc
            if order <= 0:
                raise CorpusSyntaxError("order must be positive", lineno)
            current["order"] = order
        elif key in ("lhs", "rhs"):
            current[key] = value
        else:
            raise CorpusSyntaxError(f"unknown key {key!r}", lineno)
    finish()
    return records
