"""Exact arithmetic in R = Z[X, X^-1, Y, Y^-1].

A LaurentPoly is a sparse map (i, j) -> c standing for the sum of c*X^i*Y^j.
Zero coefficients are never stored, so structural equality is ring equality.
Coefficients are kept inside the signed 64-bit range; leaving it raises
CoefficientOverflowError instead of wrapping.
"""

import logging
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

import sympy as sp
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from src.errors import CoefficientOverflowError, LaurentSyntaxError, NonUnitError, PreconditionError

logger = logging.getLogger(__name__)

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

Exponent = tuple[int, int]


def _checked(c: int) -> int:
    if c < INT64_MIN or c > INT64_MAX:
        raise CoefficientOverflowError(f"Coefficient {c} exceeds the 64-bit range")
    return c


class LaurentPoly:
    """Immutable element of R in canonical sparse form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        canonical: dict[Exponent, int] = {}
        for (i, j), c in (terms or {}).items():
            c = int(c)
            if c:
                canonical[(int(i), int(j))] = _checked(c)
        self._terms = canonical
        self._hash = None

    @classmethod
    def _from_accumulator(cls, acc: dict[Exponent, int]) -> "LaurentPoly":
        poly = object.__new__(cls)
        poly._terms = {e: _checked(c) for e, c in acc.items() if c}
        poly._hash = None
        return poly

    @classmethod
    def coerce(cls, value: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return monomial(0, 0, value)
        raise TypeError(f"Cannot use {type(value).__name__} as a Laurent polynomial")

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms ordered by (j, i), i.e. row by row through the winding grid."""
        return sorted(self._terms.items(), key=lambda item: (item[0][1], item[0][0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "LaurentPoly":
        return add(self, LaurentPoly.coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return negate(self)

    def __sub__(self, other) -> "LaurentPoly":
        return add(self, negate(LaurentPoly.coerce(other)))

    def __rsub__(self, other) -> "LaurentPoly":
        return add(LaurentPoly.coerce(other), negate(self))

    def __mul__(self, other) -> "LaurentPoly":
        return mul(self, LaurentPoly.coerce(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return inverse_unit(self) ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r})"


def monomial(i: int, j: int, c: int = 1) -> LaurentPoly:
    """c * X^i * Y^j (the zero polynomial when c == 0)."""
    return LaurentPoly({(i, j): c})


ZERO = LaurentPoly()
ONE = monomial(0, 0)
X = monomial(1, 0)
Y = monomial(0, 1)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    acc = dict(p._terms)
    for e, c in q._terms.items():
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly._from_accumulator(acc)


def negate(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly._from_accumulator({e: -c for e, c in p._terms.items()})


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    acc: dict[Exponent, int] = {}
    for (i1, j1), c1 in p._terms.items():
        for (i2, j2), c2 in q._terms.items():
            e = (i1 + i2, j1 + j2)
            acc[e] = acc.get(e, 0) + c1 * c2
    return LaurentPoly._from_accumulator(acc)


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    acc: dict[Exponent, int] = {}
    for p in polys:
        for e, c in p._terms.items():
            acc[e] = acc.get(e, 0) + c
    return LaurentPoly._from_accumulator(acc)


def shift(p: LaurentPoly, k: int, l: int) -> LaurentPoly:
    """X^k Y^l * p."""
    return LaurentPoly._from_accumulator({(i + k, j + l): c for (i, j), c in p._terms.items()})


def is_unit(p: LaurentPoly) -> bool:
    """Units of R are exactly the signed monomials +-X^i Y^j."""
    if len(p._terms) != 1:
        return False
    (c,) = p._terms.values()
    return c in (1, -1)


def inverse_unit(p: LaurentPoly) -> LaurentPoly:
    """Inverse of a unit +-X^i Y^j, i.e. +-X^-i Y^-j."""
    if not is_unit(p):
        raise NonUnitError(f"{p} is not a unit of R")
    ((i, j), c), = p._terms.items()
    return monomial(-i, -j, c)


def evaluate(p: LaurentPoly, x0, y0) -> Fraction:
    """Exact value of p at X = x0, Y = y0 (both nonzero rationals)."""
    x0, y0 = Fraction(x0), Fraction(y0)
    if x0 == 0 or y0 == 0:
        raise PreconditionError("Laurent polynomials cannot be evaluated at a zero base")
    return sum((c * x0**i * y0**j for (i, j), c in p._terms.items()), Fraction(0))


def geometric_column(k: int) -> LaurentPoly:
    """q_k with (X - 1) * q_k = X^k - 1.

    For k >= 0 this is 1 + X + ... + X^(k-1); for k < 0 it is
    -(X^k + ... + X^-1).
    """
    if k >= 0:
        return LaurentPoly({(i, 0): 1 for i in range(k)})
    return LaurentPoly({(i, 0): -1 for i in range(k, 0)})


def substitute_monomials(p: LaurentPoly, x_image: Exponent, y_image: Exponent) -> LaurentPoly:
    """Apply the ring map X -> X^a Y^c, Y -> X^b Y^d.

    Args:
        p: Polynomial to transform.
        x_image: (a, c), the exponents of the image of X.
        y_image: (b, d), the exponents of the image of Y.
    """
    (a, c), (b, d) = x_image, y_image
    acc: dict[Exponent, int] = {}
    for (i, j), coeff in p._terms.items():
        e = (i * a + j * b, i * c + j * d)
        acc[e] = acc.get(e, 0) + coeff
    return LaurentPoly._from_accumulator(acc)


def _format_monomial(i: int, j: int) -> str:
    parts = []
    for name, e in (("X", i), ("Y", j)):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_laurent(p: LaurentPoly) -> str:
    """Text form, e.g. `2*Y^-1 - 2*X*Y^-1 + 1`, terms ordered by (j, i)."""
    if p.is_zero():
        return "0"
    pieces = []
    for n, ((i, j), c) in enumerate(p.sorted_terms()):
        mono = _format_monomial(i, j)
        magnitude = abs(c)
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        if n == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


_SYMBOLS = {"X": sp.Symbol("X"), "Y": sp.Symbol("Y")}
_TRANSFORMS = standard_transformations + (convert_xor,)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the text form; products, powers and brackets are expanded.

    Raises:
        LaurentSyntaxError: If `text` is not an integral Laurent polynomial in X, Y.
    """
    try:
        expr = parse_expr(text, local_dict=dict(_SYMBOLS), transformations=_TRANSFORMS)
    except Exception as e:
        raise LaurentSyntaxError(f"Cannot parse {text!r}: {e}") from e
    expr = sp.expand(sp.sympify(expr))
    extra = expr.free_symbols - set(_SYMBOLS.values())
    if extra:
        raise LaurentSyntaxError(f"Unknown symbols {sorted(map(str, extra))} in {text!r}")
    acc: dict[Exponent, int] = {}
    for term in sp.Add.make_args(expr):
        coeff, rest = term.as_coeff_Mul()
        if not coeff.is_Integer:
            raise LaurentSyntaxError(f"Non-integer coefficient {coeff} in {text!r}")
        powers = rest.as_powers_dict() if rest != 1 else {}
        if set(powers) - set(_SYMBOLS.values()):
            raise LaurentSyntaxError(f"Term {term} is not a monomial in {text!r}")
        exps = []
        for name in ("X", "Y"):
            e = sp.sympify(powers.get(_SYMBOLS[name], 0))
            if not e.is_Integer:
                raise LaurentSyntaxError(f"Non-integer exponent {e} in {text!r}")
            exps.append(int(e))
        key = (exps[0], exps[1])
        acc[key] = acc.get(key, 0) + int(coeff)
    return LaurentPoly._from_accumulator(acc)
