import cmath
import math

import numpy as np
import pytest
from scipy import special

from foxh.exceptions import PoleOfNumerator
from foxh.evaluator.catalog import ORACLE_CATALOG
from foxh.hspec import Argument, contour_window, convergence_profile, prepend_pair
from foxh.mellin import KernelPoint, integrand, log_theta, sample, theta

from .conftest import make_spec


def stirling_power(spec, c):
    """ 수직선 Re s = c 위에서 |θ| 의 다항식 차수 """
    numerators = [x.coeff.real - x.weight * c for x in spec.lower[: spec.m]]
    numerators += [1 - x.coeff.real + x.weight * c for x in spec.upper[: spec.n]]
    denominators = [1 - x.coeff.real + x.weight * c for x in spec.lower[spec.m :]]
    denominators += [x.coeff.real - x.weight * c for x in spec.upper[spec.n :]]
    return sum(x - 0.5 for x in numerators) - sum(x - 0.5 for x in denominators)


class TestTheta:
    """ θ(s) 감마 비율 """

    def test_gamma_half(self, h10):
        assert theta(h10, -0.5).to_complex() == pytest.approx(math.sqrt(math.pi), rel=1e-14)

    def test_gamma_minus_half(self, h10):
        assert theta(h10, 0.5).to_complex() == pytest.approx(-2 * math.sqrt(math.pi), rel=1e-14)

    def test_binomial_kernel(self, h11):
        assert theta(h11, 0.5).to_complex() == pytest.approx(-math.pi, rel=1e-14)

    @pytest.mark.parametrize("s", [0, 1, 4])
    def test_numerator_pole(self, h10, s):
        with pytest.raises(PoleOfNumerator):
            theta(h10, s)

    def test_denominator_pole_is_zero(self):
        spec = make_spec(1, 0, [], [(0, 1), (0, 1)])
        assert theta(spec, -1).is_zero
        assert not theta(spec, -0.5).is_zero

    def test_omit_lower(self, h11):
        s = np.array([-0.3 + 2j, 0.7 - 1j])
        logs, zero = log_theta(h11, s, omit_lower=0)
        assert not zero.any()
        assert logs == pytest.approx(special.loggamma(1 + s), rel=1e-14)

    def test_padding_adds_reflection_pair(self, h11):
        padded = prepend_pair(h11, (0.3, 0.6))
        s = np.array([-0.4 + 3j, -0.2 - 7j, -0.7])
        base, _ = log_theta(h11, s)
        extended, _ = log_theta(padded, s)
        expected = special.loggamma(0.3 - 0.6 * s) + special.loggamma(0.7 + 0.6 * s)
        assert np.max(np.abs(extended - base - expected)) <= 1e-12


class TestIntegrand:
    """ θ(s)·z^s """

    def test_unit_argument(self, h11, unit):
        s = -0.3 + 1.7j
        assert integrand(h11, unit, s).isclose(theta(h11, s))

    def test_real_damping(self, h10):
        value = integrand(h10, Argument(math.e, 0.0), -0.5).to_complex()
        assert value == pytest.approx(math.sqrt(math.pi) * math.exp(-0.5), rel=1e-14)

    def test_phase_enters_as_damping(self, h10):
        z = Argument(1.0, math.pi / 4)
        value = integrand(h10, z, 1j).to_complex()
        expected = theta(h10, 1j).to_complex() * math.exp(-math.pi / 4)
        assert value == pytest.approx(expected, rel=1e-13)

    def test_phase_is_not_reduced(self, h10):
        s = -0.5 + 0.5j
        a = integrand(h10, Argument(1.0, 0.1), s).to_complex()
        b = integrand(h10, Argument(1.0, 0.1 + 2 * math.pi), s).to_complex()
        assert abs(a - b) > 1e-3

    def test_conjugate_symmetry(self):
        spec = make_spec(2, 1, [(0.2, 1)], [(0, 1), (0.5, 1)])
        z = Argument(0.7, 0.0)
        for s in (-0.4 + 2j, -0.1 - 9j, -0.7 + 0.3j):
            lhs = integrand(spec, z, s.conjugate()).to_complex()
            rhs = integrand(spec, z, s).to_complex().conjugate()
            assert abs(lhs - rhs) <= 1e-12 * abs(rhs)

    @pytest.mark.parametrize("name", sorted(ORACLE_CATALOG))
    def test_decay_along_vertical_line(self, name):
        spec = ORACLE_CATALOG[name]
        profile = convergence_profile(spec)
        c = sum(contour_window(profile)) / 2
        z = Argument(0.5, 0.2)
        t = np.linspace(10, 60, 26)
        points = sample(spec, z, c + 1j * t)
        magnitudes = np.array([x.value.log_modulus for x in points])
        # |Γ(x+iy)| ~ √(2π)|y|^{x-1/2} e^{-π|y|/2}, |z^s| 는 t > 0 에서 e^{-0.2t} 만큼 더 감쇠
        envelope = (
            magnitudes
            + (profile.sector_halfwidth + 0.2) * t
            - stirling_power(spec, c) * np.log(t)
        )
        assert np.ptp(envelope) < math.log(2)

    def test_no_overflow_far_up(self, h11):
        value = integrand(h11, Argument(0.5, 0.0), -0.5 + 400j)
        assert math.isfinite(value.log_modulus)
        assert value.log_modulus < -1000


class TestSample:
    def test_points(self, h10, unit):
        points = sample(h10, unit, [-0.5, -0.5 + 1j])
        assert all(isinstance(x, KernelPoint) for x in points)
        assert points[0].s == -0.5
        assert points[0].value.to_complex() == pytest.approx(math.sqrt(math.pi))
        assert points[1].value.to_complex() == pytest.approx(
            complex(cmath.exp(special.loggamma(0.5 - 1j))), rel=1e-13
        )
