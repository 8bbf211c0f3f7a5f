import math

import pytest

import qlls


def test_table_values():
    assert qlls.p_classical(2, 0) == pytest.approx(0.25)
    assert qlls.p_qlls("flat", 2, 0) == pytest.approx(0.40, abs=5e-3)
    assert qlls.p_qlls("bures", 2, 0) == pytest.approx(0.30, abs=5e-3)
    assert qlls.p_qlls("flat", 4, 1) == pytest.approx(0.43, abs=5e-3)
    assert qlls.p_qlls("classical", 4, 1) == pytest.approx(1.0 / 3.0)


def test_duality_and_consistency():
    for measure in ("classical", "flat", "bures"):
        for n in range(0, 7):
            for k in range(0, n + 1):
                p = qlls.p_qlls(measure, n, k)
                assert 0.0 < p < 1.0
                assert p + qlls.p_qlls(measure, n, n - k) == pytest.approx(1.0, abs=1e-12)
    assert qlls.p_design_exact("flat", 2, 1) == pytest.approx(qlls.p_qlls("flat", 2, 1), abs=1e-9)
    assert qlls.p_discretized("bures", 2, 0, N=50) == pytest.approx(
        qlls.p_qlls("bures", 2, 0), abs=5e-3
    )


def test_designs():
    assert qlls.design_size("clifford") == 24
    assert qlls.design_size("icosahedral") == 60
    assert qlls.haar_frame_potential(3) == 5.0
    assert qlls.frame_potential("clifford", 3) == pytest.approx(5.0, abs=1e-9)
    assert qlls.verify_design("icosahedral", 5)
    assert not qlls.verify_design("clifford", 4)


def test_discrete_weights():
    grid = qlls.discrete_weights("flat", 4)
    assert grid["delta"] == pytest.approx([0.125, 0.375, 0.625, 0.875])
    assert sum(grid["omega"]) == pytest.approx(1.0)
    assert grid["w0"] == pytest.approx(grid["delta"])


def test_run_experiment_deterministic():
    first = qlls.run_experiment(n=2, M=300, K=8, measure="flat", estimator="est2", master_seed=7)
    second = qlls.run_experiment(n=2, M=300, K=8, measure="flat", estimator="est2", master_seed=7)
    assert len(first) == 3
    for a, b in zip(first, second):
        assert a == b
        assert a["successes"] + a["failed"] == 8
        assert a["mse_mean"] <= a["mse"] + 1e-15
    assert first[1]["reference"] == pytest.approx(0.5, abs=1e-12)


def test_invalid_arguments():
    with pytest.raises(ValueError):
        qlls.p_qlls("gaussian", 2, 0)
    with pytest.raises(ValueError):
        qlls.p_classical(2, 3)
    with pytest.raises(ValueError):
        qlls.run_experiment(n=4, M=10, K=2, measure="flat", design="clifford")


def test_discord():
    rho = qlls.two_copy_average("flat", "clifford")
    cxx, cyy, czz = qlls.pauli_correlations(rho)
    assert cxx == pytest.approx(1.0 / 9.0, abs=1e-10)
    assert cyy == pytest.approx(1.0 / 9.0, abs=1e-10)
    assert czz == pytest.approx(1.0 / 9.0, abs=1e-10)
    value = qlls.measurement_discord(rho)
    assert value == pytest.approx(qlls.bell_diagonal_discord_bits(1 / 9, 1 / 9, 1 / 9), abs=1e-4)
    assert value == pytest.approx(0.020252, abs=1e-4)
    assert math.isfinite(value)
