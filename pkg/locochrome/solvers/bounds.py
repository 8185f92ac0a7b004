# -*- coding:utf-8 -*-
"""
Closed-form bounds relating the fractional chromatic number to the fractional
directed local chromatic number, and the independence numbers of the
universal digraphs that show those bounds are tight.

Values are exact ``Fraction`` whenever the exponents are integers. Otherwise
they are ``Decimal`` evaluated at ``precision`` significant digits and carry
an enclosing interval; comparisons that the interval cannot decide raise
:class:`SolverError` instead of rounding.

"""

from collections import namedtuple
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, factorial

from ..utils import SolverError

DEFAULT_PRECISION = 50
_GUARD_DIGITS = 10


class RatioBound(namedtuple('RatioBound', ['k', 'value', 'e_times_k', 'exact', 'lower', 'upper'])):
    """ RatioBound
    Args:
        k: the argument, as a Fraction.
        value: k^k/(k-1)^(k-1), a Fraction when exact else a Decimal.
        e_times_k: Decimal e*k at the same precision.
        exact: whether ``value`` is exact.
        lower: lower end of an interval containing the true value.
        upper: upper end of that interval.
    """
    __slots__ = ()


def to_decimal(q):
    q = Fraction(q)
    return Decimal(q.numerator) / Decimal(q.denominator)


def euler(precision=DEFAULT_PRECISION):
    with localcontext() as ctx:
        ctx.prec = precision + _GUARD_DIGITS
        return Decimal(1).exp()


def _power_ratio(q, precision):
    """``(value, exact, lower, upper)`` for q^q/(q-1)^(q-1), ``q >= 1``."""
    q = Fraction(q)
    if q == 1:
        return Fraction(1), True, Fraction(1), Fraction(1)
    if q.denominator == 1:
        k = q.numerator
        value = Fraction(k ** k, (k - 1) ** (k - 1))
        return value, True, value, value
    with localcontext() as ctx:
        ctx.prec = precision + _GUARD_DIGITS
        x = to_decimal(q)
        value = (x * x.ln() - (x - 1) * (x - 1).ln()).exp()
        # covers the guard-digit evaluation error plus rounding to `precision` digits
        slack = abs(value) * Decimal(10) ** (1 - precision)
        lower, upper = value - slack, value + slack
    with localcontext() as ctx:
        ctx.prec = precision
        value = +value
    return value, False, lower, upper


def ratio_bound(k, precision=DEFAULT_PRECISION):
    """Upper bound k^k/(k-1)^(k-1) on χ* for digraphs with ψ_d* = k, compared with e*k.

    :param k: a rational (int, Fraction, Decimal or ``'p/q'`` string) greater than 1.
    :param precision: significant digits for non-integral ``k``.
    :return: :class:`RatioBound`.
    """
    k = Fraction(k)
    if k <= 1:
        raise ValueError(' `k` must be greater than 1, got {0} '.format(k))
    value, exact, lower, upper = _power_ratio(k, precision)
    with localcontext() as ctx:
        ctx.prec = precision + _GUARD_DIGITS
        e_times_k = euler(precision) * to_decimal(k)
    return RatioBound(k, value, e_times_k, exact, lower, upper)


def bound_holds(x, bound):
    """Decide ``x <= bound`` for an exact ``x`` against a :class:`RatioBound` (or any object with
    ``value``, ``exact``, ``lower`` and ``upper``).

    :raises SolverError: when ``x`` falls inside the uncertainty interval.
    """
    x = Fraction(x)
    if bound.exact:
        return x <= Fraction(bound.value)
    if x <= Fraction(bound.lower):
        return True
    if x > Fraction(bound.upper):
        return False
    raise SolverError('cannot decide {0} <= {1} at the working precision'.format(x, bound.value))


def chi_star_supremum(k, precision=DEFAULT_PRECISION):
    """Largest possible χ* over digraphs with ψ_d* <= k: 1 below 2, k^k/(k-1)^(k-1) from 2 on."""
    k = Fraction(k)
    if k < 1:
        raise ValueError(' `k` must be at least 1 ')
    if k < 2:
        return Fraction(1)
    return ratio_bound(k, precision).value


def alpha_universal_directed(m, k):
    """Independence number of U_d(m,k): the maximum of (m-l)*C(l, k-1) over integers ``k-1 <= l <= m``.

    :return: ``(alpha, l)`` with ``l`` the least maximizer.
    """
    if not 2 <= k <= m:
        raise ValueError(' need m >= k >= 2, got m={0}, k={1} '.format(m, k))
    best, best_l = -1, None
    for l in range(k - 1, m + 1):
        size = (m - l) * comb(l, k - 1)
        if size > best:
            best, best_l = size, l
    return best, best_l


UniversalBounds = namedtuple('UniversalBounds', ['vertices', 'alpha', 'alpha_l', 'chi_star', 'power_bound',
                                                 'asymptotic_bound', 'ratio_bound', 'chain_holds'])


def universal_directed_bounds(m, k):
    """The lower-bound chain on χ*(U_d(m,k)) next to the upper bound k^k/(k-1)^(k-1).

    ``chi_star`` is ``n / alpha`` (exact, the digraph being vertex-transitive), ``power_bound`` is
    ``m (m-1)^(k-1) / max_l (m-l) l^(k-1)`` over integers ``l``, and ``asymptotic_bound`` is
    ``(1-1/m)^(k-1) k^k/(k-1)^(k-1)``. Every link is an exact Fraction.

    :return: :class:`UniversalBounds`.
    """
    alpha, alpha_l = alpha_universal_directed(m, k)
    vertices = m * comb(m - 1, k - 1)
    chi_star = Fraction(vertices, alpha)
    power_bound = Fraction(m * (m - 1) ** (k - 1), max((m - l) * l ** (k - 1) for l in range(k - 1, m + 1)))
    upper = Fraction(k ** k, (k - 1) ** (k - 1))
    asymptotic_bound = (1 - Fraction(1, m)) ** (k - 1) * upper
    chain_holds = chi_star >= power_bound >= asymptotic_bound and chi_star <= upper
    return UniversalBounds(vertices, alpha, alpha_l, chi_star, power_bound, asymptotic_bound, upper, chain_holds)


def multi_chi_star_lower_bound(m, h, r, precision=DEFAULT_PRECISION):
    """``(1 - h/m)^h (h/r)^(h/r) / (h/r - 1)^(h/r - 1)``, a lower bound on χ*(U_d(m,h,r)).

    :return: ``(value, exact, lower, upper)``.
    """
    factor = (1 - Fraction(h, m)) ** h
    value, exact, lower, upper = _power_ratio(Fraction(h, r), precision)
    if exact:
        value = factor * value
        return value, True, value, value
    with localcontext() as ctx:
        ctx.prec = precision + _GUARD_DIGITS
        f = to_decimal(factor)
        return f * value, False, f * lower, f * upper


def alpha_universal_multi_upper_bound(m, h, r, precision=DEFAULT_PRECISION):
    """``(h/r - 1)^(h/r - 1) / (h/r)^(h/r) * m^h / (r! (h-r)!)``, an upper bound on α(U_d(m,h,r)).

    :return: ``(value, exact, lower, upper)``.
    """
    scale = Fraction(m ** h, factorial(r) * factorial(h - r))
    value, exact, lower, upper = _power_ratio(Fraction(h, r), precision)
    if exact:
        value = scale / value
        return value, True, value, value
    with localcontext() as ctx:
        ctx.prec = precision + _GUARD_DIGITS
        s = to_decimal(scale)
        return s / value, False, s / upper, s / lower


def universal_multi_vertex_count(m, h, r):
    return comb(m, r) * comb(m - r, h - r)
