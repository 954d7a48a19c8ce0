"""Linearization of products of normalized Jacobi polynomials.

The polynomials R_n are normalized so R_n(1) = 1 and satisfy

    R_1(x) R_n(x) = a_n R_{n+1}(x) + b_n R_n(x) + c_n R_{n-1}(x),

with all coefficient sequences exact rationals in the parameters.  The product
expansion R_m R_{m+s} = sum_k g(m, m+s; k) R_k is computed from closed forms at
the four extreme indices k in {s, s+1, s+2m-1, s+2m} together with a
three-point recursion in the interior; every run cross-checks the recursion
against the closed forms exactly, so an internal inconsistency cannot produce a
silently wrong vector.  A brute-force route through monomial coefficients
provides a fully independent oracle.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Rational, gen_binomial, pochhammer, to_fraction
from .exact import RationalPolynomial
from .params import JacobiParams, plus_params

FAMILY_JACOBI = "jacobi"
FAMILY_JACOBI_PLUS = "jacobi_plus"
FAMILY_GENCHEB = "gencheb"
FAMILIES = (FAMILY_JACOBI, FAMILY_JACOBI_PLUS, FAMILY_GENCHEB)


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """One row of the three-term recurrence; c_n is None for n = 0."""

    n: int
    a_n: Fraction
    b_n: Fraction
    c_n: Fraction | None

    def __post_init__(self):
        total = self.a_n + self.b_n + (self.c_n if self.c_n is not None else 0)
        if total != 1:
            raise ValueError(f"recurrence row does not sum to 1 at n={self.n}")


@dataclass(frozen=True)
class CoeffVector:
    """Linearization coefficients g(m, n; k) for k = |m-n| .. m+n.

    `values[i]` is the coefficient at k = |m-n| + i.  Indexing with [] uses
    the absolute position k.  m <= n always (constructors normalize).
    """

    m: int
    n: int
    family: str
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        expect = self.m + self.n - abs(self.m - self.n) + 1
        if len(self.values) != expect:
            raise ValueError("coefficient vector has the wrong length")
        if sum(self.values) != 1:
            raise ValueError("coefficient vector does not sum to 1")
        if self.family in (FAMILY_JACOBI, FAMILY_JACOBI_PLUS):
            if self.values[0] <= 0 or self.values[-1] <= 0:
                raise ValueError("extreme coefficients must be positive")
        else:
            for k, v in self.items():
                if (self.m + self.n - k) % 2 == 1 and v != 0:
                    raise ValueError("parity-violating entry must be zero")

    @property
    def k_min(self) -> int:
        return abs(self.m - self.n)

    @property
    def k_max(self) -> int:
        return self.m + self.n

    def __getitem__(self, k: int) -> Fraction:
        if not self.k_min <= k <= self.k_max:
            raise IndexError(f"k={k} outside support [{self.k_min}, {self.k_max}]")
        return self.values[k - self.k_min]

    def items(self):
        for i, v in enumerate(self.values):
            yield self.k_min + i, v


def jacobi_rec_coeffs(p: JacobiParams, n: int) -> RecurrenceCoeffs:
    """Recurrence row n, computed in both parametrizations and cross-checked."""
    if n < 0:
        raise ValueError("recurrence index must be >= 0")
    al, be = p.alpha, p.beta
    a, b = p.a, p.b
    if n == 0:
        a0 = (2 * al + 2) / (al + be + 2)
        a0_ab = (a + b + 1) / (a + 1)
        b0 = -(al - be) / (al + be + 2)
        b0_ab = -b / (a + 1)
        if a0 != a0_ab or b0 != b0_ab:
            raise RuntimeError("internal: recurrence parametrizations disagree at n=0")
        return RecurrenceCoeffs(0, a0, b0, None)
    an = ((al + be + 2) * (n + al + be + 1) * (n + al + 1)) / (
        (al + 1) * (2 * n + al + be + 1) * (2 * n + al + be + 2)
    )
    an_ab = ((a + 1) * (n + a) * (2 * n + a + b + 1)) / (
        (a + b + 1) * (2 * n + a) * (2 * n + a + 1)
    )
    bn_ab = (4 * b * n * (n + a)) / ((a + b + 1) * (2 * n + a - 1) * (2 * n + a + 1))
    cn_ab = ((a + 1) * n * (2 * n + a - b - 1)) / (
        (a + b + 1) * (2 * n + a - 1) * (2 * n + a)
    )
    cn = ((al + be + 2) * n * (n + be)) / (
        (al + 1) * (2 * n + al + be) * (2 * n + al + be + 1)
    )
    if an != an_ab or cn != cn_ab:
        raise RuntimeError(f"internal: recurrence parametrizations disagree at n={n}")
    return RecurrenceCoeffs(n, an_ab, bn_ab, cn_ab)


def jacobi_eval(p: JacobiParams, n: int, x: Rational) -> Fraction:
    """Evaluate R_n at a rational point by the three-term recurrence."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    x = to_fraction(x)
    if n == 0:
        return Fraction(1)
    row0 = jacobi_rec_coeffs(p, 0)
    r1 = (x - row0.b_n) / row0.a_n
    prev, cur = Fraction(1), r1
    for k in range(1, n):
        row = jacobi_rec_coeffs(p, k)
        prev, cur = cur, ((r1 - row.b_n) * cur - row.c_n * prev) / row.a_n
    return cur


def theta_iota_kappa(
    p: JacobiParams, m: int, s: int, j: Rational
) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficient functions of the three-point recursion

        theta(j) g(s+j+1) = iota(j) g(s+j) + kappa(j) g(s+j-1)

    for the product R_m R_{m+s}.  j may be rational (the functions extend to
    real j, which the zero-counting analysis uses); the admissible range is
    1 <= j <= 2m - 1.
    """
    if m < 1 or s < 0:
        raise ValueError("need m >= 1 and s >= 0")
    j = to_fraction(j)
    if not 1 <= j <= 2 * m - 1:
        raise ValueError("recursion index j must lie in [1, 2m-1]")
    a, b = p.a, p.b
    theta = (
        (2 * m - j + a - 1)
        * (2 * m + 2 * s + j + a + 1)
        * (2 * s + j + 1)
        * (2 * s + 2 * j + a - b + 1)
        / ((2 * s + 2 * j + a + 1) * (2 * s + 2 * j + a + 2))
        * (j + 1)
    )
    iota = b * (
        (2 * m - j)
        * (2 * m + 2 * s + j + 2 * a)
        * (2 * s + j + 1)
        / (2 * s + 2 * j + a + 1)
        * (j + 1)
        - (2 * m - j + 1)
        * (2 * m + 2 * s + j + 2 * a - 1)
        * (2 * s + j)
        / (2 * s + 2 * j + a - 1)
        * j
    )
    if j == 1 and s == 0 and a == 0:
        core = Fraction(0)
    else:
        core = (
            (2 * s + j + a - 1)
            * (2 * s + 2 * j + a + b - 1)
            / ((2 * s + 2 * j + a - 2) * (2 * s + 2 * j + a - 1))
            * (j + a - 1)
        )
    kappa = (2 * m - j + 1) * (2 * m + 2 * s + j + 2 * a - 1) * core
    return theta, iota, kappa


def gasper_boundary(
    p: JacobiParams, m: int, s: int
) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Closed forms for g(m, m+s; k) at k = s, s+1, s+2m-1, s+2m."""
    if m < 1 or s < 0:
        raise ValueError("need m >= 1 and s >= 0")
    a, b = p.a, p.b
    al = (a + b - 1) / 2
    be = (a - b - 1) / 2
    g_lo = (
        gen_binomial(m + s, m)
        * gen_binomial(2 * m + a - 1, m)
        * gen_binomial(m + s + be, m)
        / (
            gen_binomial(2 * m, m)
            * gen_binomial(2 * m + 2 * s + a, 2 * m)
            * gen_binomial(m + al, m)
        )
    )
    g_hi = (
        gen_binomial(2 * m + 2 * s + a - 1, m + s)
        * gen_binomial(2 * m + a - 1, m)
        * gen_binomial(2 * m + s + al, 2 * m + s)
        / (
            gen_binomial(4 * m + 2 * s + a - 1, 2 * m + s)
            * gen_binomial(m + s + al, m + s)
            * gen_binomial(m + al, m)
        )
    )
    g_lo1 = (
        4 * b * m * (m + s + a) * (2 * s + a + 2)
        / ((2 * m + 2 * s + a + 1) * (2 * m + a - 1) * (2 * s + a - b + 1))
        * g_lo
    )
    g_hi1 = (
        4 * b * m * (m + s) * (4 * m + 2 * s + a - 2)
        / ((4 * m + 2 * s + a + b - 1) * (2 * m + 2 * s + a - 1) * (2 * m + a - 1))
        * g_hi
    )
    return g_lo, g_lo1, g_hi1, g_hi


@lru_cache(maxsize=None)
def linearize_jacobi(p: JacobiParams, m: int, n: int) -> CoeffVector:
    """Full coefficient vector of R_m R_n in the R basis.

    Closed forms fill the two lowest and two highest positions; the interior
    comes from the forward recursion (theta > 0 there).  The recursion value
    at the top of its range and the final three-point identity are both
    checked exactly against the closed forms.
    """
    if m < 0 or n < 0:
        raise ValueError("degrees must be >= 0")
    if m > n:
        m, n = n, m
    if m == 0:
        return CoeffVector(0, n, FAMILY_JACOBI, (Fraction(1),))
    s = n - m
    g_lo, g_lo1, g_hi1, g_hi = gasper_boundary(p, m, s)
    vals: list[Fraction | None] = [None] * (2 * m + 1)
    vals[0], vals[1], vals[2 * m - 1], vals[2 * m] = g_lo, g_lo1, g_hi1, g_hi
    if m == 1:
        if g_lo1 != g_hi1:
            raise RuntimeError("internal: extreme closed forms disagree at m=1")
    else:
        for j in range(1, 2 * m - 1):
            theta, iota, kappa = theta_iota_kappa(p, m, s, j)
            nxt = (iota * vals[j] + kappa * vals[j - 1]) / theta
            if j + 1 == 2 * m - 1:
                if nxt != g_hi1:
                    raise RuntimeError(
                        "internal: recursion disagrees with the closed form"
                    )
            else:
                vals[j + 1] = nxt
        theta, iota, kappa = theta_iota_kappa(p, m, s, 2 * m - 1)
        if theta * g_hi != iota * g_hi1 + kappa * vals[2 * m - 2]:
            raise RuntimeError("internal: three-point identity fails at the top index")
    return CoeffVector(m, n, FAMILY_JACOBI, tuple(vals))


def linearize_jacobi_plus(p: JacobiParams, m: int, n: int) -> CoeffVector:
    """Coefficient vector for the companion family at (alpha, beta + 1)."""
    cv = linearize_jacobi(plus_params(p), m, n)
    return CoeffVector(cv.m, cv.n, FAMILY_JACOBI_PLUS, cv.values)


@lru_cache(maxsize=None)
def _monomial_basis(p: JacobiParams, family: str, count: int):
    """Polynomials 0..count-1 of the family, as monomial-coefficient vectors."""
    polys = [RationalPolynomial([1])]
    if count == 1:
        return tuple(polys)
    if family == FAMILY_GENCHEB:
        from .gencheb import gencheb_rec_coeffs

        polys.append(RationalPolynomial.variable())
        x = RationalPolynomial.variable()
        for n in range(1, count - 1):
            row = gencheb_rec_coeffs(p, n)
            polys.append((x * polys[n] - row.c_n * polys[n - 1]) * (1 / row.a_n))
        return tuple(polys)
    base = p if family == FAMILY_JACOBI else plus_params(p)
    row0 = jacobi_rec_coeffs(base, 0)
    r1 = RationalPolynomial([-row0.b_n / row0.a_n, 1 / row0.a_n])
    polys.append(r1)
    for n in range(1, count - 1):
        row = jacobi_rec_coeffs(base, n)
        nxt = (r1 * polys[n] - row.b_n * polys[n] - row.c_n * polys[n - 1]) * (
            1 / row.a_n
        )
        polys.append(nxt)
    return tuple(polys)


def linearize_bruteforce(
    p: JacobiParams, m: int, n: int, family: str = FAMILY_JACOBI
) -> CoeffVector:
    """Independent oracle: multiply in the monomial basis, convert back by
    leading-term elimination, and assert exact orthogonality (all positions
    below |m-n| vanish, remainder zero)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if m < 0 or n < 0:
        raise ValueError("degrees must be >= 0")
    if m > n:
        m, n = n, m
    basis = _monomial_basis(p, family, m + n + 1)
    product = basis[m] * basis[n]
    coeffs = [Fraction(0)] * (m + n + 1)
    rem = product
    for k in range(m + n, -1, -1):
        c = rem.coefficient(k) / basis[k].leading
        coeffs[k] = c
        if c != 0:
            rem = rem - c * basis[k]
    if not rem.is_zero:
        raise RuntimeError("internal: basis conversion left a remainder")
    for k in range(0, n - m):
        if coeffs[k] != 0:
            raise RuntimeError("internal: coefficient below the support is nonzero")
    return CoeffVector(m, n, family, tuple(coeffs[n - m :]))


def reflect_coeffs(p: JacobiParams, cv: CoeffVector) -> CoeffVector:
    """Coefficient vector of the parameter-swapped family (beta, alpha),
    obtained from the (alpha, beta) vector by the exact reflection rule

        (-1)^(m+n+k) g~(m, n; k) =
            (alpha+1)_m (alpha+1)_n (beta+1)_k
            / ((alpha+1)_k (beta+1)_m (beta+1)_n) * g(m, n; k).
    """
    if cv.family != FAMILY_JACOBI:
        raise ValueError("reflection is defined for the jacobi family")
    al, be = p.alpha, p.beta
    m, n = cv.m, cv.n
    num_const = pochhammer(al + 1, m) * pochhammer(al + 1, n)
    den_const = pochhammer(be + 1, m) * pochhammer(be + 1, n)
    out = []
    for k, v in cv.items():
        ratio = num_const * pochhammer(be + 1, k) / (pochhammer(al + 1, k) * den_const)
        sign = -1 if (m + n + k) % 2 else 1
        out.append(sign * ratio * v)
    return CoeffVector(m, n, FAMILY_JACOBI, tuple(out))
