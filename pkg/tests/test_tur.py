"""Entropy production, channel weights, activity, psi, and the bound report."""
import numpy as np
import pytest
from conftest import channel, decay_counter_qubit, thermal_qubit
from hypothesis import given, settings
from hypothesis import strategies as st

from lindtur import (
    BoundViolation,
    CurrentVanishes,
    LindbladModel,
    MASER_DEFAULTS,
    SsdbParams,
    build_classical_reference,
    build_liouvillian,
    build_ssdb,
    coherence_factor_psi,
    drazin_inverse,
    dynamical_activity,
    ell_weights,
    entropy_production_rate,
    coherence_correction_psi_cap,
    qfi_rate,
    sigma_lower_bound,
    steady_state,
    tur_report,
)
from lindtur.tur import channel_fluxes

# reference values at the default operating point, frozen from an independent
# cross-check of the analytic, CGF, and trajectory routes
MASER_POINT = {
    "J": 0.0792548131578892,
    "D": 0.0384806936424210,
    "sigma": 0.2739235593030596,
    "psi": -1.0657717379216529,
    "upsilon": 0.3046219702834738,
    "psi_cap": 0.3573091963340144,
    "qfi_rate": 0.0825427071858245,
    "sigma_lower": 0.1650854143716490,
    "tur_lhs": 1.6781121628241955,
    "coherence_bound": 0.0086518430184692,
    "xi_bound": 0.4138248402818484,
}


def _solved(model):
    liou = build_liouvillian(model)
    ss = steady_state(liou)
    return ss, drazin_inverse(liou, ss)


def test_fluxes_balance_at_equilibrium():
    model = thermal_qubit(gamma=1.0, n=1.0)
    ss, _ = _solved(model)
    f = channel_fluxes(model, ss)
    assert f[0] == pytest.approx(2.0 / 3.0, abs=1e-12)
    assert f[0] == pytest.approx(f[1], abs=1e-13)


def test_entropy_production_vanishes_at_equilibrium():
    model = thermal_qubit()
    ss, _ = _solved(model)
    assert abs(entropy_production_rate(model, ss)) < 1e-12


def test_activity_sums_both_directions():
    model = thermal_qubit(gamma=1.0, n=1.0)
    ss, _ = _solved(model)
    assert dynamical_activity(model, ss) == pytest.approx(4.0 / 3.0, abs=1e-12)


def test_ell_weights_vanish_for_balanced_pair():
    model = thermal_qubit()
    ss, _ = _solved(model)
    assert np.max(np.abs(ell_weights(model, ss))) < 1e-12


def test_ell_weights_zero_when_pair_carries_no_flux():
    # empty bath: the excited level depopulates completely, both fluxes die
    model = thermal_qubit(n=0.0)
    ss, _ = _solved(model)
    assert np.array_equal(ell_weights(model, ss), np.zeros(2))


def test_ell_weights_saturate_for_standalone_channels():
    model = decay_counter_qubit()
    ss, _ = _solved(model)
    assert np.allclose(ell_weights(model, ss), [1.0, 1.0], atol=1e-12)


def test_fisher_rate_equals_lower_bound_for_standalone_channels():
    # with no reverse partners both reduce to the total flux
    model = decay_counter_qubit(gamma_down=2.0, gamma_up=1.0)
    ss, _ = _solved(model)
    assert qfi_rate(model, ss) == pytest.approx(4.0 / 3.0, abs=1e-12)
    assert sigma_lower_bound(model, ss) == pytest.approx(4.0 / 3.0, abs=1e-12)


def test_lower_bound_is_twice_fisher_rate_for_fully_paired_models():
    model = build_ssdb(MASER_DEFAULTS)
    ss, _ = _solved(model)
    assert sigma_lower_bound(model, ss) == pytest.approx(2.0 * qfi_rate(model, ss), rel=1e-12)


def test_psi_zero_without_steady_coherence():
    # diagonal Hamiltonian and diagonal steady state commute
    model = decay_counter_qubit()
    ss, dz = _solved(model)
    assert abs(coherence_factor_psi(model, ss, dz)) < 1e-12


def test_psi_cap_zero_for_undriven_reference():
    model = build_classical_reference(MASER_DEFAULTS)
    ss, dz = _solved(model)
    assert abs(coherence_correction_psi_cap(model, ss, dz)) < 1e-12


def test_report_matches_frozen_operating_point():
    report = tur_report(build_ssdb(MASER_DEFAULTS))
    for name, expected in MASER_POINT.items():
        assert getattr(report, name) == pytest.approx(expected, rel=1e-9), name
    assert report.classical_bound == 2.0


def test_report_fields_are_internally_consistent():
    report = tur_report(build_ssdb(SsdbParams(0.1, 2.0, 5.0, 0.027, 0.15, 0.7)))
    assert report.tur_lhs == pytest.approx(report.D * report.sigma / report.J**2, rel=1e-12)
    assert report.coherence_bound == pytest.approx(2.0 * (1.0 + report.psi) ** 2, rel=1e-12)
    assert report.xi_bound == pytest.approx(
        report.sigma / (report.upsilon + report.psi_cap), rel=1e-12
    )


def test_classical_reference_sits_at_or_above_two():
    report = tur_report(build_classical_reference(MASER_DEFAULTS))
    assert report.tur_lhs >= 2.0 - 1e-9
    assert abs(report.psi) < 1e-12


def test_vanishing_drive_raises_current_error():
    with pytest.raises(CurrentVanishes):
        tur_report(build_ssdb(SsdbParams(0.1, 2.0, 5.0, 0.027, 0.0, 0.0)))


def test_bound_violation_carries_diagnostics():
    # a negative slack tightens the coherence inequality past the actual margin
    with pytest.raises(BoundViolation) as exc:
        tur_report(build_ssdb(MASER_DEFAULTS), bound_slack=-10.0)
    err = exc.value
    assert "2(1+psi)^2" in err.name
    assert err.diagnostics["J"] == pytest.approx(MASER_POINT["J"], rel=1e-9)
    assert err.lhs == pytest.approx(MASER_POINT["tur_lhs"], rel=1e-9)


def test_psi_recomputed_from_generator_difference():
    """The commutator part used inside psi equals the full generator minus dissipators."""
    from lindtur.fcs import current_superoperator
    from lindtur.superop import dissipator_part, trace_row, vectorize

    model = build_ssdb(SsdbParams(0.1, 2.0, 5.0, 0.027, 0.15, 0.4))
    liou = build_liouvillian(model)
    ss = steady_state(liou)
    dz = drazin_inverse(liou, ss)
    ham_action = (liou.matrix - dissipator_part(model).matrix) @ vectorize(ss.rho)
    val = trace_row(3) @ (current_superoperator(model).matrix @ (dz.matrix @ ham_action))
    j = tur_report(model).J
    assert coherence_factor_psi(model, ss, dz) == pytest.approx(val.real / j, rel=1e-10)


@given(
    delta=st.floats(min_value=-2.0, max_value=2.0),
    omega=st.floats(min_value=0.05, max_value=0.8),
    n_c=st.floats(min_value=0.01, max_value=2.0),
)
@settings(max_examples=30)
def test_inequalities_hold_across_parameter_space(delta, omega, n_c):
    params = SsdbParams(0.1, 2.0, 5.0, n_c, omega, delta)
    report = tur_report(build_ssdb(params))
    assert report.tur_lhs >= report.coherence_bound - 1e-9
    assert report.qfi_rate <= report.sigma / 2.0 + 1e-9
    assert report.sigma >= report.sigma_lower - 1e-9
    assert report.tur_lhs >= report.xi_bound - 1e-9
