"""Exact arithmetic for homogeneous binary forms over the rationals.

A binary form of degree D is stored densely as the coefficient tuple
(a_0, ..., a_D) of

    f(x, y) = sum_i a_i * x^(D-i) * y^i.

All coefficient arithmetic is exact (fractions.Fraction); floats only
appear in the dedicated *_float evaluation helpers used by the numeric
cross-checks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

# Coefficient field: arbitrary-precision rationals in lowest terms with
# positive denominator.  The stdlib Fraction already guarantees both.
Rat = Fraction


class ParseError(ValueError):
    """Raised when a polynomial text cannot be read."""


class NotHyperbolicError(ValueError):
    """Raised when an operation requires a hyperbolic form and the input is not."""


def _rat(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial: coeffs[i] multiplies t^i, no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [_rat(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def zero() -> UniPoly:
        return UniPoly(())

    @staticmethod
    def const(c) -> UniPoly:
        return UniPoly((_rat(c),))

    @property
    def degree(self) -> int:
        # the zero polynomial reports degree -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: UniPoly) -> UniPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(tuple(out))

    def __neg__(self) -> UniPoly:
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if self.is_zero() or other.is_zero():
                return UniPoly.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return UniPoly(tuple(out))
        return UniPoly(tuple(c * _rat(other) for c in self.coeffs))

    def __rmul__(self, other) -> UniPoly:
        return self * other

    def derivative(self) -> UniPoly:
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __call__(self, t) -> Fraction:
        t = _rat(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        """Exact euclidean division over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.leading()
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top:
                q = top / lead
                quo[k] = q
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return UniPoly(tuple(quo)), UniPoly(tuple(rem[: other.degree]))

    def __mod__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[1]

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[0]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if i > 0 and abs(c) == 1:
                term = mono
            elif i == 0:
                term = str(abs(c))
            else:
                term = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


# ---------------------------------------------------------------------------
# binary forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous polynomial in x, y; the zero form keeps its nominal degree."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be >= 0")
        cs = tuple(_rat(c) for c in self.coeffs)
        if len(cs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, got {len(cs)}"
            )
        object.__setattr__(self, "coeffs", cs)

    @staticmethod
    def zero(degree: int) -> BinaryForm:
        return BinaryForm(degree, (Fraction(0),) * (degree + 1))

    @staticmethod
    def monomial(degree: int, y_power: int, coeff=1) -> BinaryForm:
        if not 0 <= y_power <= degree:
            raise ValueError("y_power out of range")
        cs = [Fraction(0)] * (degree + 1)
        cs[y_power] = _rat(coeff)
        return BinaryForm(degree, tuple(cs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def eval(self, x, y) -> Fraction:
        x, y = _rat(x), _rat(y)
        d = self.degree
        xp = [Fraction(1)] * (d + 1)
        yp = [Fraction(1)] * (d + 1)
        for i in range(1, d + 1):
            xp[i] = xp[i - 1] * x
            yp[i] = yp[i - 1] * y
        return sum((c * xp[d - i] * yp[i] for i, c in enumerate(self.coeffs)), Fraction(0))

    def eval_float(self, x: float, y: float) -> float:
        d = self.degree
        acc = 0.0
        for i, c in enumerate(self.coeffs):
            if c:
                acc += float(c) * x ** (d - i) * y ** i
        return acc

    def __add__(self, other: BinaryForm) -> BinaryForm:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> BinaryForm:
        return BinaryForm(self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            d = self.degree + other.degree
            out = [Fraction(0)] * (d + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return BinaryForm(d, tuple(out))
        return BinaryForm(self.degree, tuple(c * _rat(other) for c in self.coeffs))

    def __rmul__(self, other) -> BinaryForm:
        return self * other

    def __pow__(self, n: int) -> BinaryForm:
        if n < 0:
            raise ValueError("negative power")
        out = BinaryForm(0, (Fraction(1),))
        for _ in range(n):
            out = out * self
        return out

    def partial_x(self) -> BinaryForm:
        if self.degree == 0:
            raise ValueError("partial derivative needs degree >= 1")
        d = self.degree
        return BinaryForm(d - 1, tuple((d - i) * self.coeffs[i] for i in range(d)))

    def partial_y(self) -> BinaryForm:
        if self.degree == 0:
            raise ValueError("partial derivative needs degree >= 1")
        d = self.degree
        return BinaryForm(d - 1, tuple((i + 1) * self.coeffs[i + 1] for i in range(d)))

    def restrict(self, chart: str) -> UniPoly:
        """Dehomogenize: chart "x=1" gives f(1, t), chart "y=1" gives f(t, 1)."""
        if chart == "x=1":
            return UniPoly(self.coeffs)
        if chart == "y=1":
            return UniPoly(tuple(reversed(self.coeffs)))
        raise ValueError('chart must be "x=1" or "y=1"')

    def __str__(self) -> str:
        return format_form(self)


@dataclass(frozen=True)
class LinearForm:
    """a*x + b*y with (a, b) != (0, 0)."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _rat(self.a))
        object.__setattr__(self, "b", _rat(self.b))
        if self.a == 0 and self.b == 0:
            raise ValueError("linear form must be nonzero")

    def to_form(self) -> BinaryForm:
        return BinaryForm(1, (self.a, self.b))


def rotational_derivative(f: BinaryForm) -> BinaryForm:
    """x*f_y - y*f_x; restricting to the unit circle differentiates in the angle."""
    if f.degree < 1:
        raise ValueError("rotational derivative needs degree >= 1")
    x = BinaryForm(1, (Fraction(1), Fraction(0)))
    y = BinaryForm(1, (Fraction(0), Fraction(1)))
    return x * f.partial_y() - y * f.partial_x()


def euler_check(f: BinaryForm) -> bool:
    """Exact check of x*f_x + y*f_y == degree * f."""
    if f.degree < 1:
        raise ValueError("euler_check needs degree >= 1")
    x = BinaryForm(1, (Fraction(1), Fraction(0)))
    y = BinaryForm(1, (Fraction(0), Fraction(1)))
    return x * f.partial_x() + y * f.partial_y() == f.degree * f


# ---------------------------------------------------------------------------
# text input / output
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


class _Lexer:
    def __init__(self, text: str):
        self.tokens: list[str] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                break
            pos = m.end()
            tok = m.group(1) or m.group(2)
            if tok.strip():
                self.tokens.append(tok)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.i += 1
        return tok


# parser works on sparse bivariate dicts {(x_power, y_power): coeff} so that
# homogeneity can be checked once at the end
_Bivar = dict


def _bv_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return {k: v for k, v in out.items() if v != 0}


def _bv_mul(a, b):
    out: dict = {}
    for (i, j), u in a.items():
        for (k, l), v in b.items():
            key = (i + k, j + l)
            out[key] = out.get(key, Fraction(0)) + u * v
    return {k: v for k, v in out.items() if v != 0}


def _bv_scale(a, s):
    return {k: v * s for k, v in a.items() if v * s != 0}


def _parse_expr(lx: _Lexer):
    acc = _parse_product(lx)
    while lx.peek() in ("+", "-"):
        op = lx.next()
        rhs = _parse_product(lx)
        acc = _bv_add(acc, rhs if op == "+" else _bv_scale(rhs, Fraction(-1)))
    return acc


def _parse_product(lx: _Lexer):
    acc = _parse_signed(lx)
    while lx.peek() == "*":
        lx.next()
        acc = _bv_mul(acc, _parse_signed(lx))
    return acc


def _parse_signed(lx: _Lexer):
    sign = 1
    while lx.peek() in ("+", "-"):
        if lx.next() == "-":
            sign = -sign
    val = _parse_power(lx)
    return val if sign > 0 else _bv_scale(val, Fraction(-1))


def _parse_power(lx: _Lexer):
    base = _parse_atom(lx)
    if lx.peek() == "^":
        lx.next()
        tok = lx.next()
        if not tok.isdigit():
            raise ParseError(f"exponent must be a nonnegative integer, got {tok!r}")
        out = {(0, 0): Fraction(1)}
        for _ in range(int(tok)):
            out = _bv_mul(out, base)
        return out
    return base


def _parse_atom(lx: _Lexer):
    tok = lx.next()
    if tok == "(":
        inner = _parse_expr(lx)
        if lx.next() != ")":
            raise ParseError("missing closing parenthesis")
        return inner
    if tok == "x":
        return {(1, 0): Fraction(1)}
    if tok == "y":
        return {(0, 1): Fraction(1)}
    if tok.isdigit():
        num = int(tok)
        if lx.peek() == "/":
            lx.next()
            den = lx.next()
            if not den.isdigit() or int(den) == 0:
                raise ParseError("denominator must be a positive integer")
            return {(0, 0): Fraction(num, int(den))}
        return {(0, 0): Fraction(num)}
    raise ParseError(f"unexpected token {tok!r}")


_VECTOR_RE = re.compile(r"^\s*(\d+)\s*:(.*)$", re.S)


def parse_form(text: str) -> BinaryForm:
    """Read a form from expression text ("x^3 - x*y^2") or a coefficient
    vector ("3: 1, 0, -1, 0").

    The expression must be homogeneous; "x + y^2" is rejected.
    """
    m = _VECTOR_RE.match(text)
    if m:
        degree = int(m.group(1))
        parts = [p.strip() for p in m.group(2).split(",")]
        if len(parts) != degree + 1:
            raise ParseError(
                f"coefficient vector for degree {degree} needs {degree + 1} entries"
            )
        try:
            return BinaryForm(degree, tuple(Fraction(p) for p in parts))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient: {exc}") from None
    lx = _Lexer(text)
    if lx.peek() is None:
        raise ParseError("empty input")
    bv = _parse_expr(lx)
    if lx.peek() is not None:
        raise ParseError(f"trailing input at {lx.peek()!r}")
    if not bv:
        return BinaryForm.zero(0)
    degrees = {i + j for (i, j) in bv}
    if len(degrees) > 1:
        raise ParseError(f"not homogeneous: monomial degrees {sorted(degrees)}")
    d = degrees.pop()
    cs = [Fraction(0)] * (d + 1)
    for (i, j), v in bv.items():
        cs[j] = v
    return BinaryForm(d, tuple(cs))


def format_form(f: BinaryForm) -> str:
    """Canonical text; parse_form(format_form(f)) == f for nonzero forms."""
    if f.is_zero():
        return "0"
    d = f.degree
    parts = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        xp, yp = d - i, i
        mono = []
        if xp:
            mono.append("x" if xp == 1 else f"x^{xp}")
        if yp:
            mono.append("y" if yp == 1 else f"y^{yp}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "*".join(mono)
        else:
            body = "*".join([str(abs(c))] + mono)
        parts.append(("- " if c < 0 else "+ ") + body)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def coeff_vector_string(f: BinaryForm) -> str:
    """The "D: a_0, ..., a_D" encoding."""
    return f"{f.degree}: " + ", ".join(str(c) for c in f.coeffs)
