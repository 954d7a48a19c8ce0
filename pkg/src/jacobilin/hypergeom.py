"""Terminating hypergeometric closed forms for single linearization entries.

Two routes are provided:

* a general closed form for g(m, m+s; s+j) as a very-well-poised terminating
  9F8 at unit argument, valid strictly inside the open region a > 0, b > 0
  (one branch per parity of j), plus a companion single-formula variant valid
  for alpha >= beta >= -1/2;
* an ultraspherical product formula (alpha = beta), valid for alpha > -1/2.

On the boundary of the open region the 9F8 forms are limits only, and a few
isolated interior lines make denominator parameters hit nonpositive integers;
both cases raise SingularSeriesError rather than being evaluated.  The
summation bound of every series is derived from its terminating numerator
parameter, never by scanning for zero terms.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import Rational, pochhammer, to_fraction
from .jacobi import FAMILY_JACOBI, CoeffVector
from .params import JacobiParams, make_params

_HALF = Fraction(1, 2)


class SingularSeriesError(ValueError):
    """A denominator parameter hits a nonpositive integer before the series
    terminates; the value exists only as a limit (boundary limit required)."""


@dataclass(frozen=True)
class HypTermSum:
    """A terminating hypergeometric sum at unit argument.

    value = sum_{r=0}^{term_count} prod (num_i)_r / (prod (den_j)_r * r!).
    term_count comes from the terminating numerator parameter of the formula
    that builds the sum.
    """

    numerator_params: tuple[Fraction, ...]
    denominator_params: tuple[Fraction, ...]
    term_count: int

    def evaluate(self) -> Fraction:
        total = Fraction(0)
        term = Fraction(1)
        for r in range(self.term_count + 1):
            total += term
            if r == self.term_count:
                break
            den = Fraction(r + 1)
            for d in self.denominator_params:
                den *= d + r
            if den == 0:
                raise SingularSeriesError(
                    "denominator parameter vanishes before termination; "
                    "boundary limit required"
                )
            num = Fraction(1)
            for a in self.numerator_params:
                num *= a + r
            if num == 0:
                break
            term = term * num / den
        return total


def _require_open_region(p: JacobiParams) -> None:
    if p.a > 0 and p.b > 0:
        return
    if p.a >= 0 and p.b >= 0:
        raise ValueError(
            "formula undefined without limit; use linearize_jacobi"
        )
    raise ValueError(
        "parameters outside the open region a > 0, b > 0; use linearize_jacobi"
    )


def _check_indices(m: int, s: int, j: int) -> None:
    if m < 1 or s < 0:
        raise ValueError("need m >= 1 and s >= 0")
    if not 0 <= j <= 2 * m:
        raise ValueError("offset j must lie in [0, 2m]")


def rahman_coefficient(p: JacobiParams, m: int, s: int, j: int) -> Fraction:
    """g(m, m+s; s+j) by the terminating 9F8 closed form, a > 0 and b > 0."""
    _check_indices(m, s, j)
    _require_open_region(p)
    al, be = p.alpha, p.beta
    big = (
        (al + be + 1 + 2 * s + 2 * j)
        / (al + be + 1)
        * pochhammer(m + al + be + 1, m)
        * pochhammer(al + 1, s + j)
        * pochhammer(be + 1, m + s)
        * pochhammer(al + be + 1, 2 * s + j)
        * pochhammer(al + be + 1, j)
        * factorial(m + s)
        / (
            pochhammer(al + 1, s)
            * pochhammer(al + 1, m)
            * pochhammer(be + 1, s + j)
            * pochhammer(al + be + 2, 2 * m + 2 * s + j)
            * factorial(s)
            * factorial(j)
        )
    )
    jh = Fraction(j, 2)
    if j % 2 == 0:
        half = j // 2
        pref = (
            big
            * pochhammer(-m, half)
            * pochhammer(al + be + m + s + 1, half)
            / (pochhammer(-m - (al + be) / 2, half) * pochhammer(al + s + 1, half))
            * pochhammer(-m - al, half)
            * pochhammer(be + m + s + 1, half)
            * pochhammer(_HALF, half)
            / (
                pochhammer(_HALF - m - (al + be) / 2, half)
                * pochhammer(s + 1, half)
                * pochhammer(al + 1, half)
            )
        )
        series = HypTermSum(
            numerator_params=(
                al,
                1 + al / 2,
                al + _HALF,
                (al - be) / 2,
                (al - be + 1) / 2,
                al + be + m + s + 1 + jh,
                -m + jh,
                -s - jh,
                -jh,
            ),
            denominator_params=(
                al / 2,
                _HALF,
                (al + be) / 2 + 1,
                (al + be + 1) / 2,
                -be - m - s - jh,
                al + m + 1 - jh,
                al + s + 1 + jh,
                al + 1 + jh,
            ),
            term_count=half,
        )
    else:
        up = (j + 1) // 2
        down = (j - 1) // 2
        pref = (
            big
            * pochhammer(-m, up)
            * pochhammer(al + be + m + s + 1, up)
            / (pochhammer(-m - (al + be) / 2, up) * pochhammer(al + s + 1, up))
            * pochhammer(-m - al, down)
            * pochhammer(be + m + s + 1, down)
            * pochhammer(Fraction(3, 2), down)
            / (
                pochhammer(_HALF - m - (al + be) / 2, down)
                * pochhammer(s + 1, down)
                * pochhammer(al + 2, down)
            )
            * (al - be)
            / (al + be + 1)
        )
        series = HypTermSum(
            numerator_params=(
                al + 1,
                (al + 3) / 2,
                al + _HALF,
                (al - be) / 2 + 1,
                (al - be + 1) / 2,
                al + be + m + s + Fraction(3, 2) + jh,
                -m + _HALF + jh,
                _HALF - s - jh,
                Fraction(1 - j, 2),
            ),
            denominator_params=(
                (al + 1) / 2,
                Fraction(3, 2),
                (al + be) / 2 + 1,
                (al + be + 3) / 2,
                Fraction(1 - j, 2) - be - m - s,
                al + m + Fraction(3, 2) - jh,
                al + s + Fraction(3, 2) + jh,
                al + Fraction(3, 2) + jh,
            ),
            term_count=down,
        )
    return pref * series.evaluate()


def rahman_special(p: JacobiParams, m: int, s: int, j: int) -> Fraction:
    """g(m, m+s; s+j) by the single-series companion form, alpha >= beta >= -1/2.

    At alpha = beta the odd-j values come out exactly zero.  Configurations
    where a denominator parameter vanishes before termination (alpha = beta
    with even j >= 2, or beta = -1/2 with s = 0) raise SingularSeriesError.
    """
    _check_indices(m, s, j)
    al, be = p.alpha, p.beta
    if not (al >= be >= -_HALF):
        raise ValueError(
            "companion formula needs alpha >= beta >= -1/2"
        )
    jh = Fraction(j, 2)
    e = be + s + _HALF
    series = HypTermSum(
        numerator_params=(
            e,
            1 + e / 2,
            be + _HALF,
            be + m + s + 1,
            -m - al,
            (al + be + 1) / 2 + s + jh,
            (al + be + 2) / 2 + s + jh,
            Fraction(1 - j, 2),
            -jh,
        ),
        denominator_params=(
            e / 2,
            Fraction(s + 1),
            -m + _HALF,
            al + be + m + s + Fraction(3, 2),
            (be - al) / 2 + Fraction(2 - j, 2),
            (be - al) / 2 + Fraction(1 - j, 2),
            be + s + 1 + jh,
            be + s + Fraction(3, 2) + jh,
        ),
        term_count=j // 2,
    )
    value = series.evaluate()
    pref = (
        (al + be + 1 + 2 * s + 2 * j)
        / (al + be + 1)
        * Fraction(factorial(m + s), factorial(s) * factorial(j))
        * pochhammer(be + 1, m + s)
        * pochhammer(al + be + 1, 2 * m)
        / (
            pochhammer(al + 1, m)
            * pochhammer(be + 1, s)
            * pochhammer(al + be + 1, m)
        )
        * pochhammer(al + be + 1, 2 * s + j)
        * pochhammer(-2 * m, j)
        * pochhammer(2 * al + 2 * be + 2 * m + 2 * s + 2, j)
        / (
            pochhammer(al + be + 2, 2 * m + 2 * s + j)
            * pochhammer(-2 * m - al - be, j)
        )
        * pochhammer(al - be, j)
        / pochhammer(2 * be + 2 * s + 2, j)
    )
    return pref * value


def dougall_coefficient(alpha: Rational, m: int, n: int) -> CoeffVector:
    """Ultraspherical product expansion (alpha = beta > -1/2) as a full vector.

    The entry at k = m + n - 2t is an explicit product; odd-offset positions
    are structural zeros of the ultraspherical family.
    """
    alpha = to_fraction(alpha)
    if alpha <= -_HALF:
        raise ValueError("ultraspherical closed form needs alpha > -1/2")
    if m < 0 or n < 0:
        raise ValueError("degrees must be >= 0")
    make_params(alpha, alpha)  # range check alpha > -1
    if m > n:
        m, n = n, m
    vals = [Fraction(0)] * (2 * m + 1)
    for t in range(m + 1):
        k = m + n - 2 * t
        c = (
            factorial(t)
            * pochhammer(alpha + _HALF, t)
            * binom_nat(m, t)
            * binom_nat(n, t)
            * (m + n + alpha + _HALF - 2 * t)
            * pochhammer(alpha + _HALF, m - t)
            * pochhammer(alpha + _HALF, n - t)
            * pochhammer(2 * alpha + 1, m + n - t)
            / (
                (m + n + alpha + _HALF - t)
                * pochhammer(alpha + _HALF, m + n - t)
                * pochhammer(2 * alpha + 1, m)
                * pochhammer(2 * alpha + 1, n)
            )
        )
        vals[k - (n - m)] = c
    return CoeffVector(m, n, FAMILY_JACOBI, tuple(vals))


def binom_nat(n: int, k: int) -> Fraction:
    """Binomial coefficient for naturals, exact."""
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(factorial(n), factorial(k) * factorial(n - k))
