"""Dense integer polynomials with arbitrary-precision coefficients.

A polynomial a_0 + a_1 x + ... + a_d x^d is stored as the coefficient tuple
(a_0, a_1, ..., a_d) with a_d != 0; the zero polynomial is the empty tuple.
Values are immutable and safe to share between threads.

The text grammar accepted by :func:`parse_poly` (and emitted, in a fixed
canonical form, by :func:`format_poly`):

    poly   :=  [sign] term (sign term)*
    term   :=  INT | INT '*'? 'x' power | 'x' power
    power  :=  ('^' INT)?
    sign   :=  '+' | '-'

Whitespace is ignored; INT is an arbitrary-precision decimal integer; both
the ASCII hyphen and U+2212 are accepted as minus.  Like terms are combined.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import DegreeError, PolyParseError, ZeroPolynomialError

__all__ = [
    "IntPoly",
    "X",
    "degree",
    "content",
    "primitive_part",
    "derivative",
    "multiply",
    "monicize",
    "dilate",
    "parse_poly",
    "format_poly",
    "poly_from_coeff_json",
    "poly_to_coeff_json",
]

# Degrees beyond this are rejected by the parser: the dense representation
# would allocate one slot per exponent.
_MAX_PARSE_EXPONENT = 100_000


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(int(c) for c in cs)


class IntPoly:
    """Immutable dense polynomial over the integers."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Index of the highest nonzero coefficient; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _normalize([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "IntPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "IntPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "IntPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, a: int) -> int:
        """Exact evaluation at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc


def _coerce(v) -> IntPoly:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly([v])
    raise TypeError(f"cannot coerce {type(v).__name__} to IntPoly")


#: The monomial x, convenient for building polynomials in code and tests.
X = IntPoly((0, 1))


def degree(p: IntPoly) -> int | None:
    return p.degree


def content(p: IntPoly) -> int:
    """gcd of all coefficients, returned positive."""
    if p.is_zero:
        raise ZeroPolynomialError("content of zero polynomial")
    return math.gcd(*p.coeffs) if len(p.coeffs) > 1 else abs(p.coeffs[0])


def primitive_part(p: IntPoly) -> IntPoly:
    """p divided by its content (sign of the leading coefficient kept)."""
    c = content(p)
    return IntPoly([a // c for a in p.coeffs])


def derivative(p: IntPoly) -> IntPoly:
    return IntPoly([i * c for i, c in enumerate(p.coeffs)][1:])


def multiply(a: IntPoly, b: IntPoly) -> IntPoly:
    return a * b


def monicize(g: IntPoly) -> IntPoly:
    """Monic integer polynomial h of the same degree with h(c*x) = c^(d-1)*g(x).

    Here c is the leading coefficient and d the degree of g; the coefficients
    are h_i = g_i * c^(d-1-i), which are integers because h_d = 1.
    """
    d = g.degree
    if d is None or d < 1:
        raise DegreeError("monicize requires a nonconstant polynomial")
    c = g.leading
    return IntPoly([gi * c ** (d - 1 - i) for i, gi in enumerate(g.coeffs[:-1])] + [1])


def dilate(p: IntPoly, c: int) -> IntPoly:
    """p(c*x)."""
    return IntPoly([a * c**i for i, a in enumerate(p.coeffs)])


# -- text form -------------------------------------------------------------

_TOKEN = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<sign>[+\-−])
    | (?P<int>\d+)
    | (?P<star>\*)
    | (?P<x>x)
    | (?P<caret>\^)
    """,
    re.VERBOSE,
)


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def parse_poly(text: str) -> IntPoly:
    """Parse the polynomial grammar described in the module docstring.

    Raises :class:`PolyParseError` carrying the byte offset of the first
    offending character.
    """
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolyParseError(
                f"unexpected character {text[pos]!r}", _byte_offset(text, pos)
            )
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))

    coeffs: dict[int, int] = {}
    i = 0

    def fail(msg: str, tok_index: int):
        raise PolyParseError(msg, _byte_offset(text, tokens[tok_index][2]))

    def parse_term(sign: int):
        nonlocal i
        kind, value, _ = tokens[i]
        coeff = None
        if kind == "int":
            coeff = int(value)
            i += 1
            if tokens[i][0] == "star":
                i += 1
                if tokens[i][0] != "x":
                    fail("expected 'x' after '*'", i)
        if tokens[i][0] == "x":
            i += 1
            exponent = 1
            if tokens[i][0] == "caret":
                i += 1
                if tokens[i][0] != "int":
                    fail("expected integer exponent after '^'", i)
                exponent = int(tokens[i][1])
                if exponent > _MAX_PARSE_EXPONENT:
                    fail(f"exponent exceeds {_MAX_PARSE_EXPONENT}", i)
                i += 1
            coeff = 1 if coeff is None else coeff
            coeffs[exponent] = coeffs.get(exponent, 0) + sign * coeff
        elif coeff is not None:
            coeffs[0] = coeffs.get(0, 0) + sign * coeff
        else:
            fail("expected a term", i)

    first = True
    while tokens[i][0] != "end":
        sign = 1
        if tokens[i][0] == "sign":
            sign = -1 if tokens[i][1] in "-−" else 1
            i += 1
        elif not first:
            fail("expected '+' or '-' between terms", i)
        parse_term(sign)
        first = False
    if first:
        raise PolyParseError("empty input", 0)

    if not coeffs:
        return IntPoly()
    top = max(coeffs)
    return IntPoly([coeffs.get(k, 0) for k in range(top + 1)])


def format_poly(p: IntPoly) -> str:
    """Canonical text form: descending powers, explicit '^' and '*'."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for e in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            xs = "x" if e == 1 else f"x^{e}"
            body = xs if mag == 1 else f"{mag}*{xs}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# -- JSON coefficient form ---------------------------------------------------
# Coefficient arrays [a_0, a_1, ..., a_d] travel as decimal strings so values
# beyond native integer range survive any JSON implementation.


def poly_from_coeff_json(values: Sequence[int | str]) -> IntPoly:
    out = []
    for k, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise PolyParseError(f"coefficient {k} is not an integer or string", k)
        try:
            out.append(int(v))
        except ValueError:
            raise PolyParseError(f"coefficient {k} is not a decimal integer", k) from None
    return IntPoly(out)


def poly_to_coeff_json(p: IntPoly) -> list[str]:
    return [str(c) for c in p.coeffs]
