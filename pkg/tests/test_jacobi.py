"""The plain polynomial family: recurrence, evaluation, three-point recursion
coefficients, closed-form boundary entries, and the full product expansions."""

import random
from fractions import Fraction

import pytest

from jacobilin import (
    FAMILY_JACOBI,
    FAMILY_JACOBI_PLUS,
    gasper_boundary,
    jacobi_eval,
    jacobi_rec_coeffs,
    linearize_bruteforce,
    linearize_jacobi,
    linearize_jacobi_plus,
    make_params,
    plus_params,
    reflect_coeffs,
    swap_params,
    theta_iota_kappa,
)

from conftest import GRID, GRID_DELTA_INTERIOR, rand_alpha_beta

F = Fraction


class TestRecurrenceCoeffs:
    def test_frozen_triples(self):
        rc = jacobi_rec_coeffs(make_params(1, 0), 1)
        assert (rc.a_n, rc.b_n, rc.c_n) == (F(27, 40), F(1, 5), F(1, 8))
        rc = jacobi_rec_coeffs(make_params(0, 0), 1)
        assert (rc.a_n, rc.b_n, rc.c_n) == (F(2, 3), 0, F(1, 3))
        rc = jacobi_rec_coeffs(make_params(F(-1, 2), F(-1, 2)), 2)
        assert (rc.a_n, rc.b_n, rc.c_n) == (F(1, 2), 0, F(1, 2))

    def test_degree_zero(self):
        rc = jacobi_rec_coeffs(make_params(1, 0), 0)
        assert rc.c_n is None
        assert rc.a_n == F(4, 3) and rc.b_n == F(-1, 3)

    def test_sum_is_one_random(self):
        rng = random.Random(2207)
        for _ in range(40):
            p = make_params(*rand_alpha_beta(rng))
            n = rng.randint(1, 12)
            rc = jacobi_rec_coeffs(p, n)
            assert rc.a_n + rc.b_n + rc.c_n == 1

    def test_symmetric_line_kills_middle(self):
        p = make_params(F(3, 4), F(3, 4))
        for n in range(1, 8):
            assert jacobi_rec_coeffs(p, n).b_n == 0


class TestEvaluation:
    @pytest.mark.parametrize("point", GRID[::4])
    def test_normalized_at_one(self, point):
        p = make_params(*point)
        for n in range(9):
            assert jacobi_eval(p, n, 1) == 1

    def test_frozen_values(self):
        assert jacobi_eval(make_params(1, 0), 1, 0) == F(1, 4)
        assert jacobi_eval(make_params(0, 0), 2, 0) == F(-1, 2)

    def test_product_recurrence_identity(self):
        rng = random.Random(615)
        for _ in range(15):
            p = make_params(*rand_alpha_beta(rng))
            n = rng.randint(1, 7)
            x = F(rng.randint(-8, 8), rng.randint(1, 9))
            rc = jacobi_rec_coeffs(p, n)
            lhs = jacobi_eval(p, 1, x) * jacobi_eval(p, n, x)
            rhs = (
                rc.a_n * jacobi_eval(p, n + 1, x)
                + rc.b_n * jacobi_eval(p, n, x)
                + rc.c_n * jacobi_eval(p, n - 1, x)
            )
            assert lhs == rhs


class TestRecursionCoefficients:
    def test_theta_positive_in_interior_range(self):
        rng = random.Random(3310)
        for _ in range(20):
            p = make_params(*rand_alpha_beta(rng))
            m = rng.randint(2, 5)
            s = rng.randint(0, 3)
            for j in range(1, 2 * m - 1):
                theta, _, _ = theta_iota_kappa(p, m, s, j)
                assert theta > 0

    def test_kappa_positive_from_two(self):
        rng = random.Random(3311)
        for _ in range(20):
            p = make_params(*rand_alpha_beta(rng))
            m = rng.randint(2, 5)
            s = rng.randint(0, 3)
            for j in range(2, 2 * m):
                _, _, kappa = theta_iota_kappa(p, m, s, j)
                assert kappa > 0

    def test_kappa_vanishes_at_one_when_a_zero(self):
        # kappa carries a factor (j + a - 1), so kappa(1) = 0 on the line
        # a = 0; at s = 0 this is a removable 0/0 handled by a special case.
        p = make_params(F(-1, 2), F(-1, 2))
        assert p.a == 0
        for s in (0, 1, 2):
            _, _, kappa = theta_iota_kappa(p, 3, s, 1)
            assert kappa == 0
        _, _, kappa = theta_iota_kappa(make_params(1, 0), 3, 0, 1)
        assert kappa > 0

    def test_iota_vanishes_on_symmetric_line(self):
        p = make_params(F(1, 4), F(1, 4))
        for m, s in [(2, 0), (3, 1), (4, 2)]:
            for j in range(1, 2 * m):
                _, iota, _ = theta_iota_kappa(p, m, s, j)
                assert iota == 0
        _, iota, _ = theta_iota_kappa(p, 3, 0, F(5, 2))
        assert iota == 0

    def test_rational_index_accepted(self):
        p = make_params(1, 0)
        theta, _, _ = theta_iota_kappa(p, 2, 1, F(3, 2))
        assert theta != 0


class TestGasperBoundary:
    def test_degree_one_closed_forms(self):
        lo, lo1, hi1, hi = gasper_boundary(make_params(1, 0), 1, 0)
        assert (lo, lo1, hi1, hi) == (F(1, 8), F(1, 5), F(1, 5), F(27, 40))

    def test_symmetric_line_zeros(self):
        lo, lo1, hi1, hi = gasper_boundary(make_params(F(1, 2), F(1, 2)), 2, 1)
        assert lo1 == 0 and hi1 == 0
        assert lo > 0 and hi > 0

    def test_matches_bruteforce_support_ends(self):
        p = make_params(1, 0)
        lo, lo1, hi1, hi = gasper_boundary(p, 2, 1)
        cv = linearize_bruteforce(p, 2, 3, FAMILY_JACOBI)
        assert lo == cv[1]
        assert lo1 == cv[2]
        assert hi1 == cv[4]
        assert hi == cv[5]


class TestLinearize:
    def test_frozen_vectors(self):
        cv = linearize_jacobi(make_params(1, 0), 1, 1)
        assert cv.values == (F(1, 8), F(1, 5), F(27, 40))
        cv = linearize_jacobi(make_params(1, 0), 2, 2)
        assert cv.values[2] == F(8, 35)
        cv = linearize_jacobi(make_params(F(-1, 2), 0), 1, 1)
        assert cv.values[1] == F(-4, 7)

    def test_chebyshev_halves(self):
        cv = linearize_jacobi(make_params(F(-1, 2), F(-1, 2)), 1, 2)
        assert cv[1] == F(1, 2) and cv[3] == F(1, 2) and cv[2] == 0

    def test_degree_zero_factor(self):
        cv = linearize_jacobi(make_params(2, F(1, 2)), 0, 5)
        assert cv.values == (F(1),)
        assert cv.k_min == cv.k_max == 5

    def test_support_window_and_indexing(self):
        cv = linearize_jacobi(make_params(1, 0), 2, 3)
        assert cv.k_min == 1 and cv.k_max == 5
        assert len(cv.values) == 2 * 2 + 1
        assert cv[1] == cv.values[0]
        assert cv[5] == cv.values[-1]
        with pytest.raises(IndexError):
            cv[0]
        with pytest.raises(IndexError):
            cv[6]
        assert list(cv.items())[0] == (1, cv.values[0])

    def test_row_sums_and_endpoints(self):
        rng = random.Random(5150)
        for _ in range(20):
            p = make_params(*rand_alpha_beta(rng))
            n = rng.randint(0, 6)
            m = rng.randint(0, n)
            cv = linearize_jacobi(p, m, n)
            assert sum(cv.values) == 1
            assert cv.values[0] > 0 and cv.values[-1] > 0

    def test_argument_order_irrelevant(self):
        p = make_params(F(1, 2), F(1, 4))
        assert linearize_jacobi(p, 2, 4).values == linearize_jacobi(p, 4, 2).values

    def test_matches_bruteforce_sample(self):
        rng = random.Random(777)
        for _ in range(6):
            p = make_params(*rand_alpha_beta(rng))
            n = rng.randint(1, 5)
            m = rng.randint(1, n)
            assert (
                linearize_jacobi(p, m, n).values
                == linearize_bruteforce(p, m, n, FAMILY_JACOBI).values
            )

    def test_plus_family_is_shifted_parameters(self):
        p = make_params(F(1, 4), F(-1, 4))
        cvp = linearize_jacobi_plus(p, 2, 3)
        assert cvp.family == FAMILY_JACOBI_PLUS
        assert cvp.values == linearize_jacobi(plus_params(p), 2, 3).values
        assert cvp.values == linearize_bruteforce(p, 2, 3, FAMILY_JACOBI_PLUS).values


class TestClosedFormSpots:
    def test_first_product_middle(self):
        rng = random.Random(909)
        for _ in range(25):
            p = make_params(*rand_alpha_beta(rng))
            a, b = p.a, p.b
            assert linearize_jacobi(p, 1, 1)[1] == 4 * b / ((a + 3) * (a + b + 1))

    def test_second_product_middle(self):
        rng = random.Random(910)
        for _ in range(25):
            p = make_params(*rand_alpha_beta(rng))
            a, b = p.a, p.b
            num = 4 * (
                (a * a + 2 * b * b + 3 * a) * (a + 3) * (a + 5)
                - 3 * (a + 1) * (a + 2) * b * b
            )
            den = (a + 3) * (a + 5) * (a + 6) * (a + b + 1) * (a + b + 3)
            assert linearize_jacobi(p, 2, 2)[2] == num / den


class TestReflection:
    def test_ultraspherical_fixed_point(self):
        p = make_params(F(1, 3), F(1, 3))
        cv = linearize_jacobi(p, 2, 2)
        assert reflect_coeffs(p, cv).values == cv.values

    def test_matches_swapped_parameters(self):
        p = make_params(1, 0)
        cv = reflect_coeffs(p, linearize_jacobi(p, 1, 1))
        assert cv.values == linearize_jacobi(swap_params(p), 1, 1).values

    def test_matches_swapped_parameters_random(self):
        rng = random.Random(4242)
        for _ in range(10):
            p = make_params(*rand_alpha_beta(rng))
            n = rng.randint(1, 5)
            m = rng.randint(1, n)
            cv = reflect_coeffs(p, linearize_jacobi(p, m, n))
            assert cv.values == linearize_jacobi(swap_params(p), m, n).values

    def test_oscillation_signs(self):
        # Reflecting a point of the nonnegativity region flips b, and the
        # reflected coefficients alternate in sign with m+n+k.
        p = make_params(1, 0)
        cv = reflect_coeffs(p, linearize_jacobi(p, 1, 2))
        for k, v in cv.items():
            sign = -1 if (1 + 2 + k) % 2 else 1
            assert sign * v >= 0
