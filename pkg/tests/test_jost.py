import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticejost.core import Potential, validate_potential
from latticejost.errors import ZeroArgumentError
from latticejost.jost import (
    fg_decompose,
    jost_coefficients,
    jost_eval,
    jost_eval_recursive,
    jost_eval_recursive_grid,
    jost_eval_recursive_pair,
    jost_solution,
    rouche_margin,
)


def b3_reference_coeffs(v1, v2, v3):
    # degree-5 coefficient formulas for a support-3 potential
    return [
        1.0,
        v1 + v2 + v3,
        v1 * v2 + (v1 + v2) * v3,
        v2 + v3 * (1.0 + v1 * v2),
        v3 * (v1 + v2),
        v3,
    ]


potentials = st.lists(
    st.floats(min_value=-3.0, max_value=3.0), min_size=1, max_size=10
).filter(lambda v: abs(v[-1]) > 1e-6)


class TestCoefficients:
    def test_trivial(self):
        assert jost_coefficients(validate_potential([])).coeffs == (1.0,)

    def test_b1(self):
        assert jost_coefficients(validate_potential([2.0])).coeffs == (1.0, 2.0)

    def test_b2(self):
        p = jost_coefficients(validate_potential([3.0, 5.0]))
        assert p.coeffs == (1.0, 8.0, 15.0, 5.0)

    def test_b3_matches_reference(self):
        v1, v2, v3 = 1.5, -0.75, 2.25
        p = jost_coefficients(validate_potential([v1, v2, v3]))
        assert np.allclose(p.coeffs, b3_reference_coeffs(v1, v2, v3), atol=1e-14)

    @given(potentials)
    @settings(max_examples=200, deadline=None)
    def test_structure(self, v):
        b = len(v)
        p = jost_coefficients(validate_potential(v))
        assert p.degree == 2 * b - 1
        assert p.coeffs[0] == 1.0
        assert p.coeffs[-1] == pytest.approx(v[-1], abs=1e-12)
        assert p.coeffs[1] == pytest.approx(sum(v), abs=1e-12)
        if b >= 2:
            assert p.coeffs[2 * b - 2] == pytest.approx(v[-1] * sum(v[:-1]), abs=1e-12)

    def test_degree_b_monomial_has_unit_product_coefficient(self):
        # coeff of z^b, as a polynomial in V, contains prod V_j with unit weight:
        # at V = t*(1,..,1) the leading t^b growth must be exactly t^b
        b = 4
        for t in (10.0, 100.0):
            p = jost_coefficients(Potential((t,) * b))
            assert p.coeffs[b] / t**b == pytest.approx(1.0, rel=1.0 / t)

    @given(potentials)
    @settings(max_examples=100, deadline=None)
    def test_sign_flip_parity(self, v):
        p = jost_coefficients(validate_potential(v))
        m = jost_coefficients(validate_potential([-x for x in v]))
        for j, (a, c) in enumerate(zip(p.coeffs, m.coeffs)):
            assert c == pytest.approx((-1.0) ** j * a, abs=1e-12)

    def test_exact_integer_coefficients(self):
        p = jost_coefficients(validate_potential([2.0, -2.0, 2.0]))
        assert all(isinstance(c, int) for c in p.exact)


class TestEvaluation:
    def test_linear_root(self):
        from latticejost.jost import JostPolynomial

        p = JostPolynomial(coeffs=(1.0, 2.0), b=1)
        assert jost_eval(p, -0.5) == 0.0

    def test_value_at_zero_is_one(self):
        p = jost_coefficients(validate_potential([1.0, -2.0, 0.5]))
        assert jost_eval(p, 0.0) == 1.0

    def test_constant(self):
        p = jost_coefficients(validate_potential([]))
        assert jost_eval(p, 3.7 + 1j) == 1.0

    def test_solution_b1_by_hand(self):
        for z in (0.3, -1.2 + 0.4j):
            f = jost_solution(validate_potential([2.0]), z)
            assert f[1] == pytest.approx(z)
            assert f[0] == pytest.approx(1.0 + 2.0 * z)

    def test_solution_free(self):
        f = jost_solution(validate_potential([]), 0.3)
        assert f == [pytest.approx(1.0)]

    def test_solution_zero_argument(self):
        with pytest.raises(ZeroArgumentError):
            jost_solution(validate_potential([2.0]), 0.0)

    def test_known_root_of_example_potential(self):
        V = validate_potential([-math.sqrt(5), 4.0 / math.sqrt(5)])
        f = jost_solution(V, 0.5)
        assert abs(f[0]) < 1e-12

    @given(potentials)
    @settings(max_examples=100, deadline=None)
    def test_recursion_agrees_with_horner(self, v):
        V = validate_potential(v)
        p = jost_coefficients(V)
        rng = np.random.default_rng(7)
        for _ in range(10):
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            if abs(z) < 0.1:
                continue
            a = jost_solution(V, z)[0]
            c = jost_eval(p, z)
            assert abs(a - c) <= 1e-10 * max(1.0, abs(c))

    def test_grid_matches_scalar(self):
        v = [1.0, -2.0, 0.5]
        xs = np.array([-0.9, -0.3, 0.2, 0.8])
        grid = jost_eval_recursive_grid(v, xs)
        for x, g in zip(xs, grid):
            assert g == pytest.approx(jost_eval_recursive(v, complex(x)).real)

    def test_pair_derivative_matches_difference_quotient(self):
        v = [1.0, -2.0, 0.5]
        z = 0.37
        f, df = jost_eval_recursive_pair(v, z)
        h = 1e-6
        fp = jost_eval_recursive(v, z + h)
        fm = jost_eval_recursive(v, z - h)
        assert df == pytest.approx((fp - fm) / (2 * h), rel=1e-8)


class TestDecomposition:
    def test_b1(self):
        V = validate_potential([2.0])
        fg = fg_decompose(V, jost_coefficients(V))
        assert fg.F_coefficient == 2.0
        assert fg.G == (1.0, 0.0)

    def test_trivial(self):
        V = validate_potential([])
        fg = fg_decompose(V, jost_coefficients(V))
        assert fg.F_coefficient == 1.0
        assert fg.G == (0.0,)

    def test_equal_pair(self):
        a = 1.5
        V = validate_potential([a, a])
        fg = fg_decompose(V, jost_coefficients(V))
        assert fg.F_coefficient == pytest.approx(a * a)
        assert np.allclose(fg.G, [1.0, 2 * a, 0.0, a])

    @given(potentials)
    @settings(max_examples=50, deadline=None)
    def test_reconstruction(self, v):
        V = validate_potential(v)
        p = jost_coefficients(V)
        fg = fg_decompose(V, p)
        assert np.allclose(fg.reconstruct(), p.coeffs, atol=1e-9)


class TestRoucheMargin:
    def test_trivial(self):
        assert rouche_margin(validate_potential([])) == 1.0

    def test_large_pair(self):
        # |F| = 100 against sum |G| = 1 + 20 + 0 + 10
        assert rouche_margin(validate_potential([10.0, 10.0])) == pytest.approx(69.0)

    def test_small_single(self):
        assert rouche_margin(validate_potential([0.1])) == pytest.approx(-0.9)
