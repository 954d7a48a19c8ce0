"""Generalized Chebyshev polynomials and their linearization.

T_n is defined through the quadratic transform: even degrees come from R_n at
2x^2 - 1, odd degrees carry an extra factor x and shift beta by one.  The
family satisfies x T_n = a_n T_{n+1} + c_n T_{n-1} with a_n + c_n = 1.

Products T_m T_n decompose by parity:

  even * even  -> the even-position entries are exactly the R-family vector;
  odd  * odd   -> even positions mix two adjacent companion-family entries
                  through the recurrence coefficients;
  mixed parity -> odd positions are rescaled odd*odd entries, the scale being
                  a ratio of inverse squared norms h.

All positions of the wrong parity are stored as explicit zeros.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Rational, to_fraction
from .jacobi import (
    FAMILY_GENCHEB,
    CoeffVector,
    jacobi_eval,
    linearize_jacobi,
    linearize_jacobi_plus,
)
from .params import JacobiParams, plus_params


@dataclass(frozen=True)
class GenChebCoeffs:
    """Recurrence pair (a_n, c_n) for x T_n = a_n T_{n+1} + c_n T_{n-1}."""

    n: int
    a_n: Fraction
    c_n: Fraction

    def __post_init__(self):
        if self.a_n + self.c_n != 1:
            raise ValueError(f"recurrence pair does not sum to 1 at n={self.n}")
        if not (0 < self.a_n < 1):
            raise ValueError(f"recurrence pair outside (0,1) at n={self.n}")


def gencheb_rec_coeffs(p: JacobiParams, n: int) -> GenChebCoeffs:
    """Recurrence pair for index n >= 1, cross-checked in both parametrizations."""
    if n < 1:
        raise ValueError("recurrence index must be >= 1")
    al, be = p.alpha, p.beta
    a, b = p.a, p.b
    if n % 2 == 1:
        r = (n + 1) // 2
        an = (r + al) / (2 * r + al + be)
        an_ab = (2 * r + a + b - 1) / (4 * r + 2 * a - 2)
        cn = (r + be) / (2 * r + al + be)
        cn_ab = (2 * r + a - b - 1) / (4 * r + 2 * a - 2)
    else:
        r = n // 2
        an = (r + al + be + 1) / (2 * r + al + be + 1)
        an_ab = (r + a) / (2 * r + a)
        cn = r / (2 * r + al + be + 1)
        cn_ab = Fraction(r) / (2 * r + a)
    if an != an_ab or cn != cn_ab:
        raise RuntimeError(f"internal: recurrence parametrizations disagree at n={n}")
    return GenChebCoeffs(n, an, cn)


def gencheb_eval(p: JacobiParams, n: int, x: Rational) -> Fraction:
    """Evaluate T_n at a rational point.

    The quadratic-transform value is cross-checked against the three-term
    recurrence; both routes must agree exactly.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    x = to_fraction(x)
    if n % 2 == 0:
        via_transform = jacobi_eval(p, n // 2, 2 * x * x - 1)
    else:
        via_transform = x * jacobi_eval(plus_params(p), (n - 1) // 2, 2 * x * x - 1)
    prev, cur = Fraction(1), x
    if n == 0:
        via_rec = prev
    elif n == 1:
        via_rec = cur
    else:
        for k in range(1, n):
            row = gencheb_rec_coeffs(p, k)
            prev, cur = cur, (x * cur - row.c_n * prev) / row.a_n
        via_rec = cur
    if via_transform != via_rec:
        raise RuntimeError("internal: transform and recurrence evaluations disagree")
    return via_transform


class NormTable:
    """Inverse squared norms h(n) = 1 / g_T(n, n; 0), h(0) = 1.

    Grows lazily and is memoized per parameter point; safe for concurrent
    reads once filled.
    """

    def __init__(self, params: JacobiParams):
        self.params = params
        self._vals: list[Fraction] = [Fraction(1)]

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("norm index must be >= 0")
        while len(self._vals) <= n:
            k = len(self._vals)
            g0 = linearize_gencheb(self.params, k, k)[0]
            if g0 <= 0:
                raise RuntimeError("internal: diagonal bottom coefficient not positive")
            self._vals.append(1 / g0)
        return self._vals[n]

    def extend_to(self, n: int) -> None:
        self.value(n)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(self._vals)


@lru_cache(maxsize=None)
def _norm_table(p: JacobiParams) -> NormTable:
    return NormTable(p)


def gencheb_norm_h(p: JacobiParams, max_degree: int) -> NormTable:
    """The norm table for p, filled through max_degree."""
    tbl = _norm_table(p)
    tbl.extend_to(max_degree)
    return tbl


def _odd_odd_entry(p: JacobiParams, m1: int, m2: int, ell: int) -> Fraction:
    """g_T(2 m1 + 1, 2 m2 + 1; 2 ell), for ell in [|m1-m2|, m1+m2+1].

    Out-of-range companion entries count as zero, which subsumes the two
    boundary cases of the assembly rule.
    """
    cv = linearize_jacobi_plus(p, m1, m2)
    total = Fraction(0)
    if cv.k_min <= ell - 1 <= cv.k_max:
        total += gencheb_rec_coeffs(p, 2 * ell - 1).a_n * cv[ell - 1]
    if cv.k_min <= ell <= cv.k_max:
        total += gencheb_rec_coeffs(p, 2 * ell + 1).c_n * cv[ell]
    return total


@lru_cache(maxsize=None)
def linearize_gencheb(p: JacobiParams, m: int, n: int) -> CoeffVector:
    """Full coefficient vector of T_m T_n in the T basis."""
    if m < 0 or n < 0:
        raise ValueError("degrees must be >= 0")
    if m > n:
        m, n = n, m
    if m == 0:
        return CoeffVector(0, n, FAMILY_GENCHEB, (Fraction(1),))
    k_lo = n - m
    vals = [Fraction(0)] * (2 * m + 1)
    if m % 2 == 0 and n % 2 == 0:
        gr = linearize_jacobi(p, m // 2, n // 2)
        for k, v in gr.items():
            vals[2 * k - k_lo] = v
    elif m % 2 == 1 and n % 2 == 1:
        m1, m2 = (m - 1) // 2, (n - 1) // 2
        for ell in range(abs(m1 - m2), m1 + m2 + 2):
            vals[2 * ell - k_lo] = _odd_odd_entry(p, m1, m2, ell)
    else:
        odd_arg = m if m % 2 == 1 else n
        even_arg = n if m % 2 == 1 else m
        mo = (odd_arg - 1) // 2
        tbl = _norm_table(p)
        h_even = tbl.value(even_arg)
        for k in range(k_lo, m + n + 1):
            if (m + n - k) % 2 == 0:
                kap = (k - 1) // 2
                vals[k - k_lo] = (
                    tbl.value(k) / h_even * _odd_odd_entry(p, mo, kap, even_arg // 2)
                )
    return CoeffVector(m, n, FAMILY_GENCHEB, tuple(vals))
