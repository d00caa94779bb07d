# series/change_of_rings.py
"""
The three change-of-rings transforms relating P_A to the series of a quotient.

    a) x a non-zero divisor:      P_A = (1 + z) P_{A/x}     x in m \\ m^2
                                  P_A = (1 - z^2) P_{A/x}   x in m^2
    b) x in (m \\ m^2) ∩ (0:m):   P_A = P_{A/x} / (1 - z P_{A/x})
    c) A Artinian Gorenstein:     P_A = P_{A/(0:m)} / (1 + z^2 P_{A/(0:m)})

Hypotheses are not checked here; callers that need them verify membership
with algebra.core (socle, powers of m).
"""
from sympy import binomial

from models.errors import SeriesError
from series.rational_series import Coercible, IntPolynomial, RationalSeries

ONE_PLUS_Z = RationalSeries.of([1, 1])
ONE_MINUS_Z2 = RationalSeries.of([1, 0, -1])
Z = RationalSeries.of([0, 1])
Z2 = RationalSeries.of([0, 0, 1])


def _factor_a(x_in_m_squared: bool) -> RationalSeries:
    return ONE_MINUS_Z2 if x_in_m_squared else ONE_PLUS_Z


def _moebius(p: RationalSeries, shift: RationalSeries) -> RationalSeries:
    """p / (1 + shift*p)"""
    den = 1 + shift * p
    if den.is_zero:
        raise SeriesError(f"1 + ({shift})·({p}) is the zero series")
    return p / den


# ----------------------------------------
# a) regular element
def rule_a(p_quotient: Coercible, x_in_m_squared: bool) -> RationalSeries:
    return RationalSeries.coerce(p_quotient) * _factor_a(x_in_m_squared)

def rule_a_inverse(p_ring: Coercible, x_in_m_squared: bool) -> RationalSeries:
    return RationalSeries.coerce(p_ring) / _factor_a(x_in_m_squared)


# ----------------------------------------
# b) socle element of degree one
def rule_b(p_quotient: Coercible) -> RationalSeries:
    return _moebius(RationalSeries.coerce(p_quotient), -Z)

def rule_b_inverse(p_ring: Coercible) -> RationalSeries:
    return _moebius(RationalSeries.coerce(p_ring), Z)


# ----------------------------------------
# c) Artinian Gorenstein ring modulo its socle
def rule_c(p_quotient: Coercible) -> RationalSeries:
    return _moebius(RationalSeries.coerce(p_quotient), Z2)

def rule_c_inverse(p_ring: Coercible) -> RationalSeries:
    return _moebius(RationalSeries.coerce(p_ring), -Z2)


def regular_ring(dim: int) -> RationalSeries:
    """(1 + z)^dim, the series of a regular local ring of dimension dim."""
    return RationalSeries(numerator=IntPolynomial(coefficients=[int(binomial(dim, k)) for k in range(dim + 1)]), denominator=IntPolynomial.of(1))
