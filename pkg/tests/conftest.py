"""Shared fixtures plus a per-criterion summary for the acceptance gate."""
import re

import numpy as np
import pytest
from hypothesis import settings

from lindtur import CountingChannel, LindbladModel

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

SIGMA_MINUS = np.array([[0.0, 1.0], [0.0, 0.0]])


def channel(mat, nu=0, delta_s=0.0, reverse_index=None):
    return CountingChannel(
        np.asarray(mat, dtype=complex), nu=nu, delta_s=delta_s, reverse_index=reverse_index
    )


def thermal_qubit(gamma=1.0, n=1.0):
    """Two-level system against one thermal bath; paired channels, zero net count."""
    ds = np.log((n + 1) / n) if n > 0 else 0.0
    return LindbladModel(
        hamiltonian=0.5 * np.diag([-1.0, 1.0]),
        channels=(
            channel(np.sqrt(gamma * (n + 1)) * SIGMA_MINUS, nu=1, delta_s=ds, reverse_index=1),
            channel(np.sqrt(gamma * n) * SIGMA_MINUS.T, nu=-1, delta_s=-ds, reverse_index=0),
        ),
    )


def decay_counter_qubit(gamma_down=2.0, gamma_up=1.0):
    """Same ladder but standalone channels counting only the downward jumps."""
    return LindbladModel(
        hamiltonian=0.5 * np.diag([-1.0, 1.0]),
        channels=(
            channel(np.sqrt(gamma_down) * SIGMA_MINUS, nu=1),
            channel(np.sqrt(gamma_up) * SIGMA_MINUS.T),
        ),
    )


@pytest.fixture
def qubit_factory():
    return thermal_qubit


# ---------------------------------------------------------------------------
# acceptance reporting: tests named test_cNN_* in test_acceptance.py get one
# PASS/FAIL line each at the end of the run

_CRITERIA = {
    1: "coherence bound D*sigma/J^2 >= 2(1+psi)^2 on 200 seeded draws, < 30 s",
    2: "classical reference keeps D*sigma/J^2 >= 2 on the same draws",
    3: "quantum model at zero detuning drops below the classical limit of 2",
    4: "coherence factor psi small at large detuning, ordered across probes",
    5: "analytic J and D match CGF finite differences at 5 detunings, < 5 s",
    6: "deformed-ensemble sensitivity equals tau*J*(1+psi) at tau = 100/gap",
    7: "Fisher rate <= sigma/2 and sigma >= pair lower bound on all draws",
    8: "Drazin inverse identities hold to 1e-10 on both models",
    9: "built generators match hand-written 5x5 and 3x3 references to 1e-12",
    10: "Monte Carlo J and D within 3 standard errors, 1e4 trajectories, < 2 min",
    11: "thermal qubit steady state gives rho_ee = 1/3 to 1e-12",
}

_outcomes = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    out = yield
    rep = out.get_result()
    if "test_acceptance.py" not in item.nodeid:
        return
    m = re.match(r"test_c(\d+)", item.name)
    if not m:
        return
    num = int(m.group(1))
    if rep.when == "call":
        if hasattr(rep, "wasxfail"):
            # strict expected failure: the assertion is honest and red
            _outcomes[num] = "FAIL (expected)" if rep.skipped else "UNEXPECTED PASS"
        elif rep.passed:
            _outcomes[num] = "PASS"
        elif rep.failed:
            _outcomes[num] = "FAIL"
    elif rep.failed:
        _outcomes[num] = f"ERROR ({rep.when})"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        desc = _CRITERIA.get(num, "")
        terminalreporter.write_line(f"criterion {num:2d}: {_outcomes[num]} - {desc}")
