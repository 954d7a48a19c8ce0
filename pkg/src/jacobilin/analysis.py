"""Sign scans, zero counting, and the ratio machinery behind them.

Everything here consumes the exact coefficient vectors from the linearization
modules.  scan_sign_pattern enumerates a coefficient family exhaustively up to
a degree bound and reports the minimum together with the first violating entry.
The remaining functions isolate the quantities that control where the gencheb
coefficients stay nonnegative: the zero count of the middle recursion
coefficient iota over its index range, the ratio functions p and q with their
large-m decomposition, and the ratio sequence phi whose alternation around -1
forces strictly positive even-position entries in the odd-index families.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exact import RationalPolynomial, count_real_roots
from .gencheb import gencheb_rec_coeffs, linearize_gencheb
from .jacobi import (
    CoeffVector,
    linearize_jacobi,
    linearize_jacobi_plus,
    reflect_coeffs,
    theta_iota_kappa,
)
from .params import JacobiParams, classify_region, plus_params

VERDICT_ALL_NONNEG = "all_nonneg"
VERDICT_ALL_POSITIVE = "all_positive_on_support"
VERDICT_VIOLATION = "violation"

SCAN_MODES = (
    "jacobi_nonneg",
    "jacobi_strict",
    "gencheb_all",
    "gencheb_odd",
    "oscillation",
)


@dataclass(frozen=True)
class SignReport:
    mode: str
    degrees_scanned: int
    verdict: str
    min_value: Fraction
    witness: tuple[int, int, int] | None
    witness_value: Fraction | None


def _scan_entries(p: JacobiParams, max_degree: int, mode: str):
    """Yield (m, n, k, value) in deterministic order for the given mode.

    Structural zeros are not part of any support: the gencheb family drops
    entries with m+n-k odd always, and on the symmetric line b = 0 the same
    parity entries of the plain family vanish identically and are skipped.
    """
    symmetric = p.b == 0
    for n in range(max_degree + 1):
        for m in range(n + 1):
            if mode in ("jacobi_nonneg", "jacobi_strict"):
                cv = linearize_jacobi(p, m, n)
                for k, v in cv.items():
                    if symmetric and (m + n - k) % 2:
                        continue
                    yield m, n, k, v
            elif mode == "oscillation":
                cv = reflect_coeffs(p, linearize_jacobi(p, m, n))
                for k, v in cv.items():
                    if symmetric and (m + n - k) % 2:
                        continue
                    sign = -1 if (m + n + k) % 2 else 1
                    yield m, n, k, sign * v
            else:
                if mode == "gencheb_odd" and m % 2 == 0 and n % 2 == 0:
                    continue
                cv = linearize_gencheb(p, m, n)
                for k, v in cv.items():
                    if (m + n - k) % 2 == 0:
                        yield m, n, k, v


def scan_sign_pattern(p: JacobiParams, max_degree: int, mode: str) -> SignReport:
    """Exhaustive sign scan over all m <= n <= max_degree for one mode.

    The verdict is `violation` exactly when some entry is negative (the
    witness is the first such entry in scan order); otherwise the scan
    distinguishes a strictly positive support from one containing zeros.
    Structural parity zeros of the gencheb family are not part of the support.
    """
    if mode not in SCAN_MODES:
        raise ValueError(f"unknown scan mode {mode!r}")
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    min_value: Fraction | None = None
    witness = None
    witness_value = None
    for m, n, k, v in _scan_entries(p, max_degree, mode):
        if min_value is None or v < min_value:
            min_value = v
        if v < 0 and witness is None:
            witness = (m, n, k)
            witness_value = v
    if min_value is None:
        min_value = Fraction(0)
    if witness is not None:
        verdict = VERDICT_VIOLATION
    elif min_value > 0:
        verdict = VERDICT_ALL_POSITIVE
    else:
        verdict = VERDICT_ALL_NONNEG
    return SignReport(mode, max_degree, verdict, min_value, witness, witness_value)


def _linear(c0, c1) -> RationalPolynomial:
    return RationalPolynomial([c0, c1])


def iota_numerator_poly(p: JacobiParams, m: int, s: int) -> RationalPolynomial:
    """iota(m, m+s; j) with its positive denominators cleared, as a polynomial
    in the real variable j.  On j >= 1 its zeros are exactly iota's zeros."""
    if m < 1 or s < 0:
        raise ValueError("need m >= 1 and s >= 0")
    a, b = p.a, p.b
    first = (
        _linear(2 * m, -1)
        * _linear(2 * m + 2 * s + 2 * a, 1)
        * _linear(2 * s + 1, 1)
        * _linear(1, 1)
        * _linear(2 * s + a - 1, 2)
    )
    second = (
        _linear(2 * m + 1, -1)
        * _linear(2 * m + 2 * s + 2 * a - 1, 1)
        * _linear(2 * s, 1)
        * _linear(0, 1)
        * _linear(2 * s + a + 1, 2)
    )
    return b * (first - second)


def iota_zero_count(p: JacobiParams, m: int, s: int) -> int | None:
    """Number of zeros of iota(m, m+s; .) on the closed index range [1, 2m-1].

    Returns None for b = 0, where iota vanishes identically (degenerate).
    A zero exactly at j = 1 is detected by direct evaluation; the rest are
    counted by Sturm sequences on (1, 2m-1].
    """
    if m < 1 or s < 0:
        raise ValueError("need m >= 1 and s >= 0")
    if p.b == 0:
        return None
    poly = iota_numerator_poly(p, m, s)
    at_one = 1 if poly(1) == 0 else 0
    if m == 1:
        return at_one
    return at_one + count_real_roots(poly, 1, 2 * m - 1)


def chi_m_poly(p: JacobiParams, m: int) -> RationalPolynomial:
    """The degree-4 polynomial chi_m with

        iota(m, m; j) (2j+a-1)(2j+a+1) = -b * chi_m(j).

    The identity is verified exactly at sample rational j before returning.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    a = p.a
    chi = _linear(2 * m + 1, -1) * _linear(2 * m + 2 * a - 1, 1) * _linear(
        0, 1
    ) * _linear(0, 1) * _linear(a + 1, 2) - _linear(2 * m, -1) * _linear(
        2 * m + 2 * a, 1
    ) * _linear(1, 1) * _linear(1, 1) * _linear(a - 1, 2)
    if chi.degree > 4:
        raise RuntimeError("internal: chi_m must have degree at most 4")
    numer = iota_numerator_poly(p, m, 0)
    for j in (1, Fraction(3, 2), 2, Fraction(7, 3), 3):
        if numer(j) != -p.b * chi(j):
            raise RuntimeError("internal: chi_m identity fails at a sample point")
    return chi


@dataclass(frozen=True)
class PQRecord:
    """The ratio functions p, q at (m, s, j) and their m-isolating split

        p = p_inf + p_star / D,   q = q_inf + q_star / D,
        D = (2m - j + a)(2m + 2s + j + a + 2),

    where p_inf, p_star, q_inf, q_star do not depend on m.  The split is
    asserted exactly on construction."""

    m: int
    s: int
    j: int
    p: Fraction
    q: Fraction
    p_inf: Fraction
    p_star: Fraction
    q_inf: Fraction
    q_star: Fraction


def _pq_limit_parts(p: JacobiParams, s: int, j) -> tuple[Fraction, ...]:
    a, b = p.a, p.b
    den = (2 * s + j + 1) * (2 * s + 2 * j + a) * (2 * s + 2 * j + a + b + 1) * (j + 1)
    p_inf = -1 + (2 * s + 2 * j + a + 2) / den * (
        b * (2 * s + j + 1) * (2 * s + 2 * j + a) * (j + 1)
        + (1 - b) * (2 * s + j) * (2 * s + 2 * j + a + 1) * j
    )
    p_star = (
        (1 - b)
        * (2 * s + j + a)
        * (2 * s + 2 * j + a + 1)
        * (2 * s + 2 * j + a + 2)
        * (j + a)
        * (2 * s + 2 * j + 1)
        / den
    )
    q_inf = (
        (2 * s + 2 * j + a + 2)
        * (2 * s + j + a)
        * (2 * s + 2 * j + a - b + 1)
        * (j + a)
        / den
    )
    q_star = (
        (2 * s + 2 * j + a + 2)
        / den
        * (1 - a)
        * (2 * s + j + a)
        * (2 * s + 2 * j + a + 1)
        * (j + a)
        * (2 * s + 2 * j + a - b + 1)
    )
    return p_inf, p_star, q_inf, q_star


def pq_values(p: JacobiParams, m: int, s: int, j: int) -> PQRecord:
    """p(j) and q(j) for the odd-index even-position analysis at (m, s)."""
    if m < 2:
        raise ValueError("need m >= 2")
    if not 1 <= j <= 2 * m - 1:
        raise ValueError("index j must lie in [1, 2m-1]")
    pp = plus_params(p)
    theta_p, iota_p, kappa_p = theta_iota_kappa(pp, m, s, j)
    if theta_p == 0:
        raise ValueError("singular point: the leading recursion coefficient vanishes")
    c_hi = gencheb_rec_coeffs(p, 2 * s + 2 * j + 3).c_n
    a_mid = gencheb_rec_coeffs(p, 2 * s + 2 * j + 1).a_n
    c_mid = gencheb_rec_coeffs(p, 2 * s + 2 * j + 1).c_n
    a_lo = gencheb_rec_coeffs(p, 2 * s + 2 * j - 1).a_n
    p_val = c_hi / a_mid * iota_p / theta_p
    q_val = c_mid * c_hi / (a_lo * a_mid) * kappa_p / theta_p
    p_inf, p_star, q_inf, q_star = _pq_limit_parts(p, s, j)
    big_d = (2 * m - j + p.a) * (2 * m + 2 * s + j + p.a + 2)
    if p_val != p_inf + p_star / big_d or q_val != q_inf + q_star / big_d:
        raise RuntimeError("internal: p/q decomposition fails")
    return PQRecord(m, s, j, p_val, q_val, p_inf, p_star, q_inf, q_star)


def omega_value(p: JacobiParams, s: int, j: int) -> Fraction:
    """The large-m margin omega_j of the chained inequality, closed form."""
    a, b = p.a, p.b
    return (
        (b - a)
        * b
        * (2 * s * (2 * s + 2 * j + a + 2) + (j + a) * (2 * j + 4) + 1 - a)
        / ((2 * s + j + 1) * (2 * s + j + 2) * (j + 1) * (j + 2))
        * (2 * s + 2 * j + a + 2)
        * (2 * s + 2 * j + a + 4)
        / ((2 * s + 2 * j + a + b + 1) * (2 * s + 2 * j + a + b + 3))
    )


def pq_inequality_check(p: JacobiParams, m: int, s: int) -> list[bool]:
    """Checks [1 + p(j+1)] [q(j) - p(j)] < q(j+1) for j = 1 .. 2m-2.

    Also recomputes omega_j both from its closed form and from the limit
    parts, asserts they agree and are positive (these margins are what makes
    the inequality uniform in m inside the validity region)."""
    if m < 2:
        raise ValueError("need m >= 2")
    results = []
    records = {j: pq_values(p, m, s, j) for j in range(1, 2 * m)}
    for j in range(1, 2 * m - 1):
        cur, nxt = records[j], records[j + 1]
        omega = omega_value(p, s, j)
        omega_from_parts = nxt.q_inf - (1 + nxt.p_inf) * (cur.q_inf - cur.p_inf)
        if omega != omega_from_parts:
            raise RuntimeError("internal: omega closed form disagrees with limit parts")
        if omega <= 0:
            raise ValueError(
                "omega margin not positive: parameters outside the validity region"
            )
        results.append((1 + nxt.p) * (cur.q - cur.p) < nxt.q)
    return results


@dataclass(frozen=True)
class PhiSequence:
    """Consecutive-entry ratios phi(1..2m) of the companion vector, scaled by
    recurrence coefficients; all negative, alternating around -1 inside the
    validity region."""

    m: int
    s: int
    values: tuple[Fraction, ...]

    def value(self, j: int) -> Fraction:
        if not 1 <= j <= 2 * self.m:
            raise IndexError("phi index out of range")
        return self.values[j - 1]

    def alternation_holds(self) -> bool:
        return all(
            (v < -1) if (j % 2 == 0) else (v > -1)
            for j, v in enumerate(self.values, start=1)
        )


def phi_sequence(p: JacobiParams, m: int, s: int) -> PhiSequence:
    if m < 1 or s < 0:
        raise ValueError("need m >= 1 and s >= 0")
    cv = linearize_jacobi_plus(p, m, m + s)
    vals = []
    for j in range(1, 2 * m + 1):
        lower = cv[s + j - 1]
        upper = cv[s + j]
        if lower == 0:
            raise ValueError(
                "zero companion coefficient: parameters outside the validity region"
            )
        c_t = gencheb_rec_coeffs(p, 2 * s + 2 * j + 1).c_n
        a_t = gencheb_rec_coeffs(p, 2 * s + 2 * j - 1).a_n
        phi = c_t / a_t * upper / lower
        if phi >= 0:
            raise ValueError(
                "nonnegative ratio: parameters outside the validity region"
            )
        vals.append(phi)
    return PhiSequence(m, s, tuple(vals))


def find_negativity_witness(
    p: JacobiParams, max_degree: int
) -> tuple[int, int, int, Fraction] | None:
    """First negative gencheb coefficient in the guided families, or None.

    Outside V' the search follows the two families that the necessity
    analysis singles out: entries g_T(2m+1, 2m+2s+1; 2s+2) when b < 0, and
    g_T(2m+1, 2m+1; 4) when a^2 + 2b^2 + 3a < 0.  Inside V' there is nothing
    to find and None is returned immediately.  Exhausting the degree budget
    returns None as well (inconclusive, not a nonexistence claim)."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    report = classify_region(p)
    if report.in_vprime:
        return None
    if p.b < 0:
        for big in range(3, max_degree + 1, 2):
            for s in range((big - 3) // 2 + 1):
                small = big - 2 * s
                entry = linearize_gencheb(p, small, big)[2 * s + 2]
                if entry < 0:
                    return (small, big, 2 * s + 2, entry)
        return None
    for big in range(3, max_degree + 1, 2):
        entry = linearize_gencheb(p, big, big)[4]
        if entry < 0:
            return (big, big, 4, entry)
    return None


def gasper_simplification_values(
    p: JacobiParams, m: int, s: int
) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Both product-form identities that reduce the second and second-to-last
    coefficients to the region-defining polynomial; returns ((lhs, rhs), ...)
    pairs that must be exactly equal."""
    if m < 2 or s < 0:
        raise ValueError("need m >= 2 and s >= 0")
    a, b = p.a, p.b
    theta1, iota1, kappa1 = theta_iota_kappa(p, m, s, 1)
    ratio_lo = (
        4 * b * m * (m + s + a) * (2 * s + a + 2)
        / ((2 * m + 2 * s + a + 1) * (2 * m + a - 1) * (2 * s + a - b + 1))
    )
    pref1 = (
        (2 * m + a - 1)
        * (2 * s + a - b + 1)
        * (2 * m + 2 * s + a + 1)
        * (2 * s + a + 3)
        / (4 * m * (m + s + a) * (2 * s + a + 1))
    )
    lhs1 = pref1 * (iota1 * ratio_lo + kappa1)
    rhs1 = (
        (b * b + a) * (2 * m - 4) * (2 * m + 2 * s + 2 * a + 4) * 2 * s
        + (a * a + 2 * b * b + 3 * a)
        * (
            (2 * m - 4) * (2 * m + 2 * s + 2 * a + 4)
            + 2 * s * (2 * s + 2 * a + 8)
            + (a + 3) * (a + 5)
        )
        - 3 * (a + 1) * (a + 2) * b * b
    )
    theta2, iota2, kappa2 = theta_iota_kappa(p, m, s, 2 * m - 1)
    ratio_hi = (
        4 * b * m * (m + s) * (4 * m + 2 * s + a - 2)
        / ((4 * m + 2 * s + a + b - 1) * (2 * m + 2 * s + a - 1) * (2 * m + a - 1))
    )
    pref2 = (
        (2 * m + a - 1)
        * (2 * m + 2 * s + a - 1)
        * (4 * m + 2 * s + a - 3)
        * (4 * m + 2 * s + a + b - 1)
        / (4 * m * (m + s) * (4 * m + 2 * s + a - 1))
    )
    lhs2 = pref2 * (theta2 - iota2 * ratio_hi)
    rhs2 = (
        (b * b + a) * (2 * m - 4) * (2 * m + 2 * s - 4) * (4 * m + 2 * s + 2 * a)
        + (a * a + 2 * b * b + 3 * a)
        * (
            (2 * m - 4) * (6 * m + 6 * s + 4 * a + 4)
            + 2 * s * (2 * s + 2 * a + 8)
            + (a + 3) * (a + 5)
        )
        - 3 * (a + 1) * (a + 2) * b * b
    )
    return (lhs1, rhs1), (lhs2, rhs2)


def necessity_identity_values(
    p: JacobiParams, m: int, s: int
) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction] | None]:
    """The two assembled identities behind the necessity direction.

    The first holds for all admissible parameters; the second needs b != 1
    (it divides by the companion second coefficient) and is None at b = 1.
    """
    if m < 1 or s < 0:
        raise ValueError("need m >= 1 and s >= 0")
    a, b = p.a, p.b
    pp = plus_params(p)
    ap, bp = pp.a, pp.b
    ratio1 = (
        4 * bp * m * (m + s + ap) * (2 * s + ap + 2)
        / ((2 * m + 2 * s + ap + 1) * (2 * m + ap - 1) * (2 * s + ap - bp + 1))
    )
    c3 = gencheb_rec_coeffs(p, 2 * s + 3).c_n
    a1 = gencheb_rec_coeffs(p, 2 * s + 1).a_n
    lhs1 = (
        (2 * m + a)
        * (2 * m + 2 * s + a + 2)
        * (2 * s + a + b + 1)
        / (2 * s + a + 2)
        * (c3 / a1 * ratio1 + 1)
    )
    rhs1 = 4 * b * m * m + 4 * b * (s + a + 1) * m + a * (2 * s + a + b + 1)
    if b == 1:
        return (lhs1, rhs1), None
    theta_p, iota_p, kappa_p = theta_iota_kappa(pp, m, s, 1)
    ratio2 = iota_p / theta_p + kappa_p / theta_p / ratio1
    c5 = gencheb_rec_coeffs(p, 2 * s + 5).c_n
    a3 = gencheb_rec_coeffs(p, 2 * s + 3).a_n
    lhs2 = (
        4
        * (b - 1)
        * (2 * m + a - 1)
        * (2 * m + 2 * s + a + 3)
        * (s + 1)
        * (2 * s + a + b + 3)
        / (2 * s + a + 4)
        * (c5 / a3 * ratio2 + 1)
    )
    rhs2 = (4 * m - 4) * (m + s + a + 2) * (
        (a * a + 2 * b * b + 3 * a) * (s + 1) - a * (a + 1) * s
    ) + (a + 1) * (2 * s + a + b + 3) * (
        (a + 2 * b) * (2 * s + 2 - b) + a * a + 2 * b * b + 3 * a
    )
    return (lhs1, rhs1), (lhs2, rhs2)
