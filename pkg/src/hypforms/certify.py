"""Exact certification of hyperbolicity.

A form f of degree D >= 2 is hyperbolic when the quadratic form of its
second partials is indefinite at every point away from the origin,
equivalently when f_xx*f_yy - f_xy^2 is negative there.  Everything in
this module decides signs exactly: real-root counting runs on signed
Sturm chains over the integers (content stripped at every step), and
negativity of an even form reduces by homogeneity to one chart plus one
extra point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .core import BinaryForm, LinearForm, NotHyperbolicError, Rat, UniPoly, rotational_derivative

# ---------------------------------------------------------------------------
# integer polynomial kernel
#
# Dense lists of ints, coeffs[i] * t^i, trailing zeros stripped.  Keeping the
# chains integral and primitive bounds coefficient growth and avoids Fraction
# overhead in the inner loops.
# ---------------------------------------------------------------------------


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(p)][1:]


def _content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, abs(c))
        if g == 1:
            break
    return g or 1


def _primitive(p: list[int]) -> list[int]:
    g = _content(p)
    return [c // g for c in p] if g > 1 else list(p)


def _rem_signed(a: list[int], b: list[int]) -> list[int]:
    """Positive rational multiple of the euclidean remainder a mod b."""
    lead = b[-1]
    r = list(a)
    steps = 0
    while len(r) >= len(b) and r:
        if r[-1] == 0:
            r.pop()
            continue
        shift = len(r) - len(b)
        top = r[-1]
        # cross-multiply instead of dividing; track parity of the lead factors
        r = [lead * c for c in r]
        for j, bc in enumerate(b):
            r[shift + j] -= top * bc
        _trim(r)
        steps += 1
        r = _primitive(r)
    if steps and lead < 0 and steps % 2 == 1:
        r = [-c for c in r]
    return r


def _divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact division of integer polynomials (raises if not exact)."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    q = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        top = r[k + len(b) - 1]
        if top % lead != 0:
            raise ValueError("inexact polynomial division")
        c = top // lead
        q[k] = c
        if c:
            for j, bc in enumerate(b):
                r[k + j] -= c * bc
    if any(r):
        raise ValueError("inexact polynomial division")
    return _trim(q)


def _gcd_int(a: list[int], b: list[int]) -> list[int]:
    a, b = _primitive(_trim(list(a))), _primitive(_trim(list(b)))
    while b:
        a, b = b, _rem_signed(a, b)
        b = _primitive(b)
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _squarefree(p: list[int]) -> list[int]:
    p = _primitive(_trim(list(p)))
    if len(p) <= 1:
        return p
    g = _gcd_int(p, _deriv(p))
    if len(g) == 1:
        return p
    return _primitive(_divexact(p, g))


def _yun_odd_part(p: list[int]) -> list[int]:
    """Product of the squarefree factors of odd multiplicity (Yun's algorithm)."""
    p = _primitive(_trim(list(p)))
    if len(p) <= 1:
        return [1]
    g = _gcd_int(p, _deriv(p))
    if len(g) == 1:
        return p
    out = [1]
    c = _divexact(p, g)
    d = [u - v for u, v in _zip_pad(_divexact(_deriv(p), g), _deriv(c))]
    _trim(d)
    i = 1
    while len(c) > 1:
        a = _gcd_int(c, d)
        if len(a) > 1 and i % 2 == 1:
            out = _mul_int(out, a)
        c = _divexact(c, a)
        d = [u - v for u, v in _zip_pad(_divexact(d, a), _deriv(c))]
        _trim(d)
        i += 1
    return _primitive(out)


def _zip_pad(a: list[int], b: list[int]):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _mul_int(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return out


def _chain_int(ps: list[int]) -> list[list[int]]:
    """Signed Sturm chain of a squarefree primitive polynomial."""
    chain = [ps, _primitive(_deriv(ps))]
    while len(chain[-1]) > 1:
        r = _rem_signed(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_at(p: list[int], t: Fraction) -> int:
    """Sign of p at the rational t, via homogenized all-integer Horner."""
    if not p:
        return 0
    num, den = t.numerator, t.denominator
    acc = p[-1]
    dp = 1
    for i in range(len(p) - 2, -1, -1):
        dp *= den
        acc = acc * num + p[i] * dp
    return (acc > 0) - (acc < 0)


def _sign_at_inf(p: list[int], positive: bool) -> int:
    if not p:
        return 0
    s = (p[-1] > 0) - (p[-1] < 0)
    if positive or (len(p) - 1) % 2 == 0:
        return s
    return -s


def _variations(signs: list[int]) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _var_at(chain: list[list[int]], t: Fraction | None, positive_inf: bool = True) -> int:
    if t is None:
        return _variations([_sign_at_inf(p, positive_inf) for p in chain])
    return _variations([_sign_at(p, t) for p in chain])


def _count(chain: list[list[int]], a: Fraction | None, b: Fraction | None) -> int:
    """Distinct roots in the half-open interval (a, b]; None means the infinities."""
    va = _var_at(chain, a, positive_inf=False)
    vb = _var_at(chain, b, positive_inf=True)
    return va - vb


def _int_coeffs(p: UniPoly) -> list[int]:
    """Primitive integer model of p (positive rational multiple)."""
    if p.is_zero():
        return []
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    return _primitive(ints)


# ---------------------------------------------------------------------------
# Sturm interface
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SturmChain:
    """Signed remainder chain of the squarefree part of the source polynomial."""

    polys: tuple[UniPoly, ...]


def sturm_chain(p: UniPoly) -> SturmChain:
    if p.is_zero():
        raise ValueError("zero polynomial has no Sturm chain")
    chain = _chain_int(_squarefree(_int_coeffs(p)))
    return SturmChain(tuple(UniPoly(tuple(Fraction(c) for c in q)) for q in chain))


def sturm_count(p: UniPoly, a: Fraction | None = None, b: Fraction | None = None) -> int:
    """Number of distinct real roots of p in (a, b]; a=None and b=None mean
    -infinity and +infinity.  Multiple roots count once."""
    if p.is_zero():
        raise ValueError("root counting on the zero polynomial")
    if a is not None and b is not None and a >= b:
        raise ValueError("need a < b")
    ints = _int_coeffs(p)
    if len(ints) <= 1:
        return 0
    chain = _chain_int(_squarefree(ints))
    return _count(chain, a, b)


def _isolate(chain: list[list[int]], ps: list[int], lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Disjoint half-open intervals (a, b], each holding one root of ps in (lo, hi]."""
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, _count(chain, lo, hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        nl = _count(chain, a, m)
        stack.append((a, m, nl))
        stack.append((m, b, n - nl))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# sign decisions on [0, 1]
# ---------------------------------------------------------------------------

def is_nonpositive_on_unit_interval(p: UniPoly, strict: bool) -> bool:
    """Exact decision of p <= 0 (strict: p < 0) everywhere on [0, 1]."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    zero, one = Fraction(0), Fraction(1)
    p0, p1 = p(zero), p(one)
    if strict:
        if p0 >= 0 or p1 >= 0:
            return False
        ints = _int_coeffs(p)
        if len(ints) <= 1:
            return True
        ps = _squarefree(ints)
        chain = _chain_int(ps)
        inside = _count(chain, zero, one)
        if _sign_at(ps, one) == 0:
            inside -= 1
        # no interior root and negative ends force a negative sign throughout
        return inside == 0
    if p0 > 0 or p1 > 0:
        return False
    ints = _int_coeffs(p)
    if len(ints) <= 1:
        return ints[0] <= 0 if ints else True
    odd = _yun_odd_part(ints)
    if len(odd) > 1:
        chain = _chain_int(_squarefree(odd))
        sign_changes = _count(chain, zero, one)
        if _sign_at(odd, one) == 0:
            sign_changes -= 1
        if sign_changes > 0:
            return False  # p changes sign inside (0, 1), so it is positive somewhere
    # constant sign off the roots; read it at any interior non-root point
    deg = len(ints) - 1
    for k in range(1, deg + 2):
        m = Fraction(k, deg + 2)
        s = _sign_at(ints, m)
        if s != 0:
            return s < 0
    raise AssertionError("no non-root sample found")  # impossible: > deg candidates


# ---------------------------------------------------------------------------
# negativity of even forms
# ---------------------------------------------------------------------------

def is_negative_form(h: BinaryForm) -> tuple[bool, tuple[Rat, Rat] | None]:
    """Decide h(x, y) < 0 for all (x, y) != (0, 0).

    h must be nonzero of even degree.  By homogeneity it is enough that
    h(1, t) stays negative on the whole line and that h(0, 1) < 0.  On
    rejection a rational witness point with h(witness) >= 0 is returned
    when one exists (it may not: an even-order touch of zero can happen
    at an irrational point only).
    """
    if h.is_zero():
        raise ValueError("negativity test on the zero form")
    if h.degree % 2 == 1:
        raise ValueError("negativity test needs even degree")
    at_x = h.coeffs[0]   # h(1, 0)
    at_y = h.coeffs[-1]  # h(0, 1)
    if at_x >= 0:
        return False, (Fraction(1), Fraction(0))
    if at_y >= 0:
        return False, (Fraction(0), Fraction(1))
    line = h.restrict("x=1")
    ints = _int_coeffs(line)
    ps = _squarefree(ints)
    if len(ps) <= 1:
        return True, None
    chain = _chain_int(ps)
    total = _count(chain, None, None)
    if total == 0:
        return True, None
    return False, _root_witness(h, line, chain, ps)


def _root_witness(h: BinaryForm, line: UniPoly, chain, ps) -> tuple[Rat, Rat] | None:
    # Cauchy bound keeps every root inside (-bound, bound]
    lead = abs(ps[-1])
    bound = Fraction(1) + max(Fraction(abs(c), lead) for c in ps)
    for a, b in _isolate(chain, ps, -bound, bound):
        # odd multiplicity forces a sign change, so an endpoint value >= 0
        # exists unless the single root sits exactly at b
        if line(a) >= 0:
            return (Fraction(1), a)
        if line(b) >= 0:
            return (Fraction(1), b)
        # both ends negative: an even-multiplicity touch of zero; a rational
        # witness exists only if the root itself is rational
        r = _rational_root_in(ps, a, b)
        if r is not None:
            return (Fraction(1), r)
    return None


def _rational_root_in(ps: list[int], a: Fraction, b: Fraction) -> Fraction | None:
    """Rational roots of a primitive integer polynomial in (a, b], by trial
    division over divisors of the extreme coefficients (skipped when the
    coefficients are too composite to enumerate cheaply)."""
    const = next((c for c in ps if c != 0), 0)
    lead = ps[-1]
    if abs(const) > 10**9 or abs(lead) > 10**9:
        return None
    tz = next(i for i, c in enumerate(ps) if c != 0)
    if tz and a < 0 <= b:
        return Fraction(0)
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if a < cand <= b and _sign_at(ps, cand) == 0:
                    return cand
    return None


def _divisors(n: int) -> list[int]:
    if n == 0:
        return []
    out = set()
    d = 1
    while d * d <= n and d <= 100000:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# hyperbolicity certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Outcome of an exact hyperbolicity decision.

    witness is a rational point where the certifying form fails to be
    negative; it is present only for (some) rejections.
    """

    verdict: str                     # "hyperbolic" | "not_hyperbolic"
    method: str                      # "hessian" | "polar"
    degree: int
    witness: tuple[Rat, Rat] | None = None

    @property
    def is_hyperbolic(self) -> bool:
        return self.verdict == "hyperbolic"

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict, "method": self.method, "degree": self.degree}
        if self.witness is not None:
            out["witness"] = [str(self.witness[0]), str(self.witness[1])]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def hessian(f: BinaryForm) -> BinaryForm:
    """f_xx*f_yy - f_xy^2, a form of degree 2*deg(f) - 4."""
    if f.degree < 2:
        raise ValueError("hessian needs degree >= 2")
    fx = f.partial_x()
    fy = f.partial_y()
    return fx.partial_x() * fy.partial_y() - fx.partial_y() * fx.partial_y()


def polar_form(f: BinaryForm) -> BinaryForm:
    """The degree-2D form whose circle restriction is
    D^2*F^2 + D*F*F'' - (D-1)*F'^2 for F the circle restriction of f."""
    if f.degree < 1:
        raise ValueError("polar form needs degree >= 1")
    d = f.degree
    r1 = rotational_derivative(f)
    r2 = rotational_derivative(r1)
    return d * d * (f * f) + d * (f * r2) - (d - 1) * (r1 * r1)


@lru_cache(maxsize=8192)
def _certify(f: BinaryForm, method: str) -> Certificate:
    if method == "hessian":
        target = hessian(f)
    elif method == "polar":
        target = polar_form(f)
    else:
        raise ValueError(f"unknown method {method!r}")
    if target.is_zero():
        # happens exactly for powers of a single linear form; every point
        # is then a witness against strict negativity
        return Certificate(
            "not_hyperbolic", method, f.degree, (Fraction(1), Fraction(0))
        )
    ok, wit = is_negative_form(target)
    return Certificate(
        verdict="hyperbolic" if ok else "not_hyperbolic",
        method=method,
        degree=f.degree,
        witness=None if ok else wit,
    )


def is_hyperbolic(f: BinaryForm) -> Certificate:
    """Certify via negativity of the hessian form (degree >= 2)."""
    if f.degree < 2:
        raise ValueError("hyperbolicity is defined for degree >= 2")
    if f.is_zero():
        return Certificate("not_hyperbolic", "hessian", f.degree, (Fraction(1), Fraction(0)))
    return _certify(f, "hessian")


def is_hyperbolic_polar(f: BinaryForm) -> Certificate:
    """Certify via negativity of the polar form; agrees with is_hyperbolic."""
    if f.degree < 2:
        raise ValueError("hyperbolicity is defined for degree >= 2")
    if f.is_zero():
        return Certificate("not_hyperbolic", "polar", f.degree, (Fraction(1), Fraction(0)))
    return _certify(f, "polar")


def require_hyperbolic(f: BinaryForm) -> Certificate:
    cert = is_hyperbolic(f)
    if not cert.is_hyperbolic:
        raise NotHyperbolicError(f"form is not hyperbolic: {f}")
    return cert


# ---------------------------------------------------------------------------
# products with a linear factor
# ---------------------------------------------------------------------------

def hess_linear_product(l: LinearForm, f: BinaryForm) -> BinaryForm:
    """Hessian of l*f assembled without differentiating the product:
    ((D+1)/(D-1)) * l^2 * hessian(f) - (a*f_y - b*f_x)^2 for l = a*x + b*y."""
    d = f.degree
    if d < 2:
        raise ValueError("needs deg f >= 2")
    lf = l.to_form()
    g = l.a * f.partial_y() - l.b * f.partial_x()
    return Fraction(d + 1, d - 1) * (lf * lf * hessian(f)) - g * g


def linear_extension_is_hyperbolic(l: LinearForm, f: BinaryForm) -> bool:
    """For hyperbolic f: l*f is hyperbolic iff l does not divide
    a*f_y - b*f_x.  Divisibility is read off at the root direction of l."""
    require_hyperbolic(f)
    g = l.a * f.partial_y() - l.b * f.partial_x()
    if g.is_zero():
        return False
    return g.eval(l.b, -l.a) != 0
