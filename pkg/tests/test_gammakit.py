import cmath
import math

import mpmath
import numpy as np
import pytest

from foxh.exceptions import (
    PoleAtHalfInteger,
    PoleAtInteger,
    PoleAtNonPositiveInteger,
    PoleInFactor,
)
from foxh.gammakit import (
    LogComplex,
    duplication_split,
    log_gamma,
    log_gamma_values,
    pole_mask,
    property_suite,
    reflection_cos,
    reflection_sin,
)


class TestLogGamma:
    """ 주가지 로그감마 """

    def test_gamma_one(self):
        value = log_gamma(1)
        assert value.log_modulus == pytest.approx(0, abs=1e-15)
        assert value.phase == pytest.approx(0, abs=1e-15)

    def test_gamma_half(self):
        assert log_gamma(0.5).log_modulus == pytest.approx(0.5723649429247001, rel=1e-14)

    def test_gamma_one_plus_i(self):
        expected = complex(mpmath.gamma(1 + 1j))
        value = log_gamma(1 + 1j).to_complex()
        assert abs(value - expected) <= 1e-13 * abs(expected)
        assert abs(value) == pytest.approx(math.sqrt(math.pi / math.sinh(math.pi)), rel=1e-13)

    @pytest.mark.parametrize("z", [0, -1, -7, -2 + 1e-15j])
    def test_poles(self, z):
        with pytest.raises(PoleAtNonPositiveInteger):
            log_gamma(z)

    def test_vectorized_against_mpmath(self, rng):
        z = rng.uniform(-20, 20, 200) + 1j * rng.uniform(-60, 60, 200)
        values = log_gamma_values(z)
        for point, value in zip(z, values):
            expected = complex(mpmath.loggamma(complex(point)))
            assert abs(value - expected) <= 1e-13 * max(1.0, abs(expected))

    def test_pole_mask(self):
        mask = pole_mask(np.array([0, -3, 0.5, 1, -2 + 0.1j]))
        assert mask.tolist() == [True, True, False, False, False]


class TestReflection:
    """ sin πz, cos πz 의 감마 표현 """

    @pytest.mark.parametrize(
        "z,expected", [(0.5, 1.0), (0.25, math.sqrt(2) / 2), (1.5, -1.0)]
    )
    def test_sin_values(self, z, expected):
        assert reflection_sin(z) == pytest.approx(expected, rel=1e-13)

    def test_sin_exponential_form(self):
        z = 0.3 + 0.2j
        expected = (cmath.exp(1j * math.pi * z) - cmath.exp(-1j * math.pi * z)) / 2j
        assert abs(reflection_sin(z) - expected) <= 1e-12 * abs(expected)

    @pytest.mark.parametrize("z", [0, 1, -3])
    def test_sin_pole(self, z):
        with pytest.raises(PoleAtInteger):
            reflection_sin(z)

    @pytest.mark.parametrize("z,expected", [(0, 1.0), (0.25, math.sqrt(2) / 2), (1, -1.0)])
    def test_cos_values(self, z, expected):
        assert reflection_cos(z) == pytest.approx(expected, rel=1e-13)

    def test_cos_exponential_form(self):
        z = 0.1 - 0.4j
        expected = (cmath.exp(1j * math.pi * z) + cmath.exp(-1j * math.pi * z)) / 2
        assert abs(reflection_cos(z) - expected) <= 1e-12 * abs(expected)

    @pytest.mark.parametrize("z", [0.5, -0.5, 2.5])
    def test_cos_pole(self, z):
        with pytest.raises(PoleAtHalfInteger):
            reflection_cos(z)


class TestDuplicationSplit:
    """ Γ(x)Γ(1-x) 를 2x, ½±x 의 감마로 분할 """

    def test_quarter(self):
        lhs, rhs = duplication_split(0.25, 0.0, 0.0)
        assert lhs.to_complex() == pytest.approx(math.pi * math.sqrt(2), rel=1e-13)
        assert lhs.isclose(rhs, 1e-12)

    def test_pole_identifies_factor(self):
        with pytest.raises(PoleInFactor) as info:
            duplication_split(0.5, 0.0, 0.0)
        assert info.value.factor == "Γ(1-2β+2δs)"

    def test_complex_point(self):
        lhs, rhs = duplication_split(0.3, 0.5, 0.2 + 1.5j)
        assert lhs.isclose(rhs, 1e-12)

    def test_far_up_the_line(self):
        lhs, rhs = duplication_split(0.7, 0.9, -1.3 + 45j)
        assert lhs.log_modulus < -100
        assert lhs.isclose(rhs, 1e-11)


class TestLogComplex:
    def test_product_and_quotient(self):
        a = LogComplex.from_complex(2 + 1j)
        b = LogComplex.from_complex(-0.5 + 3j)
        assert (a * b).to_complex() == pytest.approx((2 + 1j) * (-0.5 + 3j))
        assert (a / b).to_complex() == pytest.approx((2 + 1j) / (-0.5 + 3j))

    def test_zero(self):
        zero = LogComplex.zero()
        assert (zero * LogComplex.from_complex(3)).is_zero
        assert (zero / LogComplex.from_complex(3)).is_zero
        assert LogComplex.from_complex(0).is_zero
        with pytest.raises(ZeroDivisionError):
            LogComplex.from_complex(3) / zero

    def test_phase_compared_modulo_two_pi(self):
        assert LogComplex(0.0, math.pi).isclose(LogComplex(0.0, -math.pi))
        assert not LogComplex(0.0, 0.0).isclose(LogComplex(0.0, math.pi))

    def test_large_magnitudes(self):
        big = LogComplex(800.0, 0.3)
        small = LogComplex(-800.0, -0.3)
        assert (big * small).to_complex() == pytest.approx(1.0)

    def test_conjugate(self):
        a = LogComplex.from_complex(1 - 2j)
        assert a.conjugate().to_complex() == pytest.approx(1 + 2j)


class TestPropertySuite:
    """ 시드 표본 검사 """

    def test_default_passes(self):
        report = property_suite(1000, seed=0)
        assert report.passed, report.worst
        assert set(report.worst) == {
            "reflection_sin",
            "reflection_cos",
            "duplication_split",
            "recurrence",
        }

    def test_deterministic(self):
        assert property_suite(200, seed=7).worst == property_suite(200, seed=7).worst

    def test_injected_fault_is_caught(self):
        report = property_suite(100, seed=0, inject_fault=True)
        assert not report.passed
        assert report.offenders["reflection_sin"][0]["residual"] >= 1e-6

    def test_vacuous(self):
        report = property_suite(0)
        assert report.passed
        assert report.worst == {}
