"""Unit tests for the closed-form bound functions."""

from __future__ import annotations

import mpmath
import pytest

from partlog_numeric.bounds import (
    bound_bundle,
    c_lower,
    c_surrogate,
    cwx_upper,
    d_lower,
    dp_relaxed_upper,
    error_envelope,
    f_component,
    f_second_derivative,
    reference_bounds,
    sandwich_bounds,
    thm32_majorant,
    thm32_upper,
)


def _mu(x: mpmath.mpf) -> mpmath.mpf:
    return mpmath.pi / 6 * mpmath.sqrt(24 * x - 1)


def _components() -> dict[int, object]:
    d = mpmath.pi**2 / (6 * mpmath.sqrt(3))
    return {
        1: lambda x: _mu(x) / x,
        2: lambda x: -3 * mpmath.log(_mu(x)) / x,
        3: lambda x: mpmath.log(_mu(x) - 1) / x,
        4: lambda x: mpmath.log(d) / x,
    }


def _log_t_over_n(k: int) -> mpmath.mpf:
    m = _mu(mpmath.mpf(k))
    d = mpmath.pi**2 / (6 * mpmath.sqrt(3))
    return (mpmath.log(d) - 2 * mpmath.log(m) + mpmath.log(1 - 1 / m) + m) / k


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_components_enclose_reference(i: int) -> None:
    with mpmath.workdps(50):
        reference = _components()[i](mpmath.mpf(100))
    value = f_component(i, 100, 128)
    assert value.lo <= reference <= value.hi


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_second_derivatives_match_numerical_differentiation(i: int) -> None:
    with mpmath.workdps(50):
        reference = mpmath.diff(_components()[i], mpmath.mpf(100), 2)
    value = f_second_derivative(i, 100, 128)
    assert abs(value.mid() - reference) <= abs(reference) * mpmath.mpf("1e-15")


def test_component_index_is_validated() -> None:
    with pytest.raises(ValueError):
        f_component(5, 10, 64)
    with pytest.raises(ValueError):
        f_second_derivative(0, 10, 64)


@pytest.mark.parametrize("n", [50, 100, 400])
def test_sandwich_brackets_second_difference_of_log_t(n: int) -> None:
    with mpmath.workdps(60):
        second = _log_t_over_n(n + 1) + _log_t_over_n(n - 1) - 2 * _log_t_over_n(n)
    b1, b2 = sandwich_bounds(n, 128)
    assert b1.hi < second < b2.lo


def test_envelope_matches_formula() -> None:
    with mpmath.workdps(50):
        reference = 5 / mpmath.mpf(99) * mpmath.exp(-mpmath.pi * mpmath.sqrt(24 * 100 - 25) / 18)
    envelope = error_envelope(100, 128)
    assert envelope.lo <= reference <= envelope.hi
    assert float(envelope.mid()) == pytest.approx(1.021e-5, rel=5e-3)


def test_thm32_upper_at_two() -> None:
    with mpmath.workdps(50):
        three_pi = 3 * mpmath.pi
        reference = three_pi / (mpmath.sqrt(24) * mpmath.mpf(2) ** mpmath.mpf(2.5) + three_pi)
    value = thm32_upper(2, 128)
    assert value.lo <= reference <= value.hi
    assert float(value.mid()) == pytest.approx(0.25378, abs=1e-5)


def test_cwx_upper_matches_formula() -> None:
    with mpmath.workdps(50):
        q = 24 * mpmath.pi / mpmath.mpf(24 * 300) ** mpmath.mpf(1.5)
        reference = q - q * q
    value = cwx_upper(300, 128)
    assert value.lo <= reference <= value.hi


def test_c_lower_value_at_forty() -> None:
    assert float(c_lower(40, 96).mid()) == pytest.approx(1.706e-5, rel=5e-3)
    assert c_lower(2, 96).is_negative()


def test_d_lower_changes_sign() -> None:
    assert d_lower(100, 96).is_negative()
    assert d_lower(1000, 96).is_positive()


def test_c_surrogate_threshold() -> None:
    assert c_surrogate(601, 96).is_negative()
    assert c_surrogate(602, 96).is_positive()


def test_c_surrogate_stays_below_c() -> None:
    for n in (700, 2000, 10000):
        assert c_surrogate(n, 96).hi < c_lower(n, 96).lo


def test_thm32_majorant_below_reference_bound_at_large_n() -> None:
    assert thm32_majorant(10_000, 96).hi < thm32_upper(10_000, 96).lo


def test_relaxed_bound_matches_formula() -> None:
    n = 200
    with mpmath.workdps(50):
        q = 24 * mpmath.pi / mpmath.mpf(24 * n) ** mpmath.mpf(1.5)
        tail = 2 * mpmath.exp(-mpmath.pi / 10 * mpmath.sqrt(mpmath.mpf(2 * n) / 3))
        reference = q - q * q - mpmath.mpf(1) / n**2 + 3 / mpmath.mpf(n) ** mpmath.mpf(2.5) + tail
    value = dp_relaxed_upper(n, 128)
    assert value.lo <= reference <= value.hi


def test_reference_bounds_agree_with_standalone_functions() -> None:
    references = reference_bounds(150, 96)
    assert references.cwx_upper == cwx_upper(150, 96)
    assert references.thm32_upper == thm32_upper(150, 96)


def test_bundle_fields_and_domain() -> None:
    bundle = bound_bundle(100, 96)
    assert list(bundle.fields()) == [
        "b1",
        "b2",
        "e_env",
        "c_val",
        "d_val",
        "dp_upper",
        "cwx_upper",
        "thm32_upper",
    ]
    assert bundle.b1.hi < bundle.b2.lo
    with pytest.raises(ValueError):
        bound_bundle(1, 96)
