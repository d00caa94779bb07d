# series/rational_series.py
"""
Integer polynomials and rational power series P(z)/Q(z).

A RationalSeries is always stored canonically: gcd(P, Q) removed, integer
content removed, Q(0) = +1. Equality of canonical forms is equality of formal
power series, so comparing two series is a field-by-field check.
"""
import logging
from typing import Dict, List, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from sympy import Poly, Symbol, ZZ, binomial, fraction, igcd, together
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from models.errors import SeriesError

logger = logging.getLogger(__name__)

z = Symbol("z")
PARSE_TRANSFORMS = standard_transformations + (implicit_multiplication_application, convert_xor)


# ============================================================
# INTEGER POLYNOMIAL
class IntPolynomial(BaseModel):
    """Coefficients constant term first, no trailing zeros (empty = zero polynomial)."""
    model_config = ConfigDict(frozen=True)

    coefficients: Tuple[int, ...] = ()

    @field_validator("coefficients", mode="before")
    @classmethod
    def strip_trailing_zeros(cls, v):
        v = [int(c) for c in v]
        while v and v[-1] == 0:
            v.pop()
        return tuple(v)

    @classmethod
    def of(cls, *coefficients: int) -> "IntPolynomial":
        return cls(coefficients=coefficients)

    @classmethod
    def from_poly(cls, p: Poly) -> "IntPolynomial":
        return cls(coefficients=[int(c) for c in reversed(p.all_coeffs())]) if not p.is_zero else cls()

    def to_poly(self) -> Poly:
        return Poly(list(reversed(self.coefficients)) or [0], z, domain=ZZ)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def binomial_power(self) -> int:
        """d if this polynomial is (1 + z)^d with d >= 1, else -1."""
        d = self.degree
        if d >= 1 and self.coefficients == tuple(int(binomial(d, k)) for k in range(d + 1)):
            return d
        return -1

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        d = self.binomial_power()
        if d == 1:
            return "(1 + z)"
        if d > 1:
            return f"(1 + z)^{d}"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("z" if k == 1 else f"z^{k}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return f"({text})" if len(terms) > 1 else text


# ============================================================
# RATIONAL SERIES
Coercible = Union["RationalSeries", IntPolynomial, int]


class RationalSeries(BaseModel):
    model_config = ConfigDict(frozen=True)

    numerator: IntPolynomial
    denominator: IntPolynomial

    @model_validator(mode="before")
    @classmethod
    def canonicalize(cls, data):
        if not isinstance(data, dict):
            return data
        num = _as_int_polynomial(data.get("numerator", IntPolynomial()))
        den = _as_int_polynomial(data.get("denominator", IntPolynomial.of(1)))
        n, d = _canonical(num.to_poly(), den.to_poly())
        return {"numerator": IntPolynomial.from_poly(n), "denominator": IntPolynomial.from_poly(d)}

    # ------------------------------------------------------------
    # Constructors
    @classmethod
    def of(cls, numerator: Sequence[int], denominator: Sequence[int] = (1,)) -> "RationalSeries":
        return cls(numerator=IntPolynomial(coefficients=numerator), denominator=IntPolynomial(coefficients=denominator))

    @classmethod
    def from_polys(cls, numerator: Poly, denominator: Poly) -> "RationalSeries":
        return cls(numerator=IntPolynomial.from_poly(numerator), denominator=IntPolynomial.from_poly(denominator))

    @classmethod
    def one(cls) -> "RationalSeries":
        return cls.of([1])

    @classmethod
    def zero(cls) -> "RationalSeries":
        return cls.of([])

    @classmethod
    def coerce(cls, value: Coercible) -> "RationalSeries":
        if isinstance(value, RationalSeries):
            return value
        if isinstance(value, IntPolynomial):
            return cls(numerator=value, denominator=IntPolynomial.of(1))
        if isinstance(value, int):
            return cls.of([value])
        raise TypeError(f"cannot coerce {type(value).__name__} to RationalSeries")

    @classmethod
    def parse(cls, text: str) -> "RationalSeries":
        """Parses the string form, e.g. "(1 + z)^2 / (1 - 3z + z^2)"."""
        try:
            expr = together(parse_expr(text.replace("·", "*"), local_dict={"z": z}, transformations=PARSE_TRANSFORMS))
        except Exception as e:
            raise SeriesError(f"cannot parse series {text!r}") from e
        num, den = fraction(expr)
        try:
            return cls.from_polys(Poly(num, z, domain=ZZ), Poly(den, z, domain=ZZ))
        except Exception as e:
            raise SeriesError(f"{text!r} is not a ratio of integer polynomials in z") from e

    @classmethod
    def from_json(cls, data: Dict[str, List[int]]) -> "RationalSeries":
        return cls.of(data["num"], data["den"])

    def to_json(self) -> Dict[str, List[int]]:
        return {"num": list(self.numerator.coefficients), "den": list(self.denominator.coefficients)}

    # ------------------------------------------------------------
    # Field operations
    def _polys(self) -> Tuple[Poly, Poly]:
        return self.numerator.to_poly(), self.denominator.to_poly()

    def __add__(self, other: Coercible) -> "RationalSeries":
        (n1, d1), (n2, d2) = self._polys(), RationalSeries.coerce(other)._polys()
        return RationalSeries.from_polys(n1 * d2 + n2 * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> "RationalSeries":
        n, d = self._polys()
        return RationalSeries.from_polys(-n, d)

    def __sub__(self, other: Coercible) -> "RationalSeries":
        return self + (-RationalSeries.coerce(other))

    def __rsub__(self, other: Coercible) -> "RationalSeries":
        return RationalSeries.coerce(other) + (-self)

    def __mul__(self, other: Coercible) -> "RationalSeries":
        (n1, d1), (n2, d2) = self._polys(), RationalSeries.coerce(other)._polys()
        return RationalSeries.from_polys(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other: Coercible) -> "RationalSeries":
        (n1, d1), (n2, d2) = self._polys(), RationalSeries.coerce(other)._polys()
        if n2.is_zero:
            raise SeriesError("division by the zero series")
        return RationalSeries.from_polys(n1 * d2, d1 * n2)

    def __rtruediv__(self, other: Coercible) -> "RationalSeries":
        return RationalSeries.coerce(other) / self

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __str__(self) -> str:
        return f"{self.numerator} / {self.denominator}"


# ----------------------------------------
# Free functions (the operation names used across the package)
def add(p: Coercible, q: Coercible) -> RationalSeries:
    return RationalSeries.coerce(p) + q

def mul(p: Coercible, q: Coercible) -> RationalSeries:
    return RationalSeries.coerce(p) * q

def div(p: Coercible, q: Coercible) -> RationalSeries:
    return RationalSeries.coerce(p) / q


def expand(p: Coercible, n: int) -> List[int]:
    """First n+1 coefficients, from the recurrence Q(z)·c(z) = P(z) (Q(0) = 1)."""
    p = RationalSeries.coerce(p)
    num, den = p.numerator, p.denominator
    coeffs: List[int] = []
    for k in range(n + 1):
        c = num[k] - sum(den[i] * coeffs[k - i] for i in range(1, min(k, den.degree) + 1))
        coeffs.append(c)
    return coeffs


def betti_recurrence_holds(coeffs: Sequence[int], h: int) -> bool:
    """c_0 = 1, c_1 = h, c_i = h*c_(i-1) - c_(i-2)."""
    if not coeffs or coeffs[0] != 1:
        return False
    if len(coeffs) > 1 and coeffs[1] != h:
        return False
    return all(coeffs[i] == h * coeffs[i - 1] - coeffs[i - 2] for i in range(2, len(coeffs)))


# ----------------------------------------
# Canonical form
def _as_int_polynomial(v) -> IntPolynomial:
    if isinstance(v, IntPolynomial):
        return v
    if isinstance(v, dict):
        return IntPolynomial(**v)
    if isinstance(v, int):
        return IntPolynomial.of(v)
    return IntPolynomial(coefficients=v)


def _canonical(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    if den.is_zero:
        raise SeriesError("zero denominator")
    if num.is_zero:
        return Poly(0, z, domain=ZZ), Poly(1, z, domain=ZZ)
    g = num.gcd(den)
    num, den = num.exquo(g), den.exquo(g)
    content = igcd(int(num.content()), int(den.content()))
    if content > 1:
        num, den = num.exquo_ground(content), den.exquo_ground(content)
    c0 = int(den.coeff_monomial(1))
    if c0 == 0:
        raise SeriesError(f"denominator {den.as_expr()} vanishes at z = 0; not a power series")
    if c0 < 0:
        num, den, c0 = -num, -den, -c0
    if c0 != 1:
        raise SeriesError(f"{num.as_expr()}/({den.as_expr()}) does not expand with integer coefficients")
    return num, den
