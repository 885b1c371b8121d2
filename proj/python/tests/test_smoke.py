import math

import pytest

import defdirac as dd


@pytest.fixture
def natural():
    return dd.PhysicalConstants(1.0, 1.0, 1.0, 0.5)


def test_couplings(natural):
    d = dd.DeformationParams.with_a(0.0, 0.1, natural)
    cp = dd.derive_couplings(natural, d)
    assert cp.alpha == pytest.approx(0.5)
    assert cp.alpha_bar_sq == pytest.approx(0.24)
    assert dd.lambda_eigenvalue(cp, 1, dd.Branch.plus) == pytest.approx(math.sqrt(0.76), abs=1e-15)


def test_coulomb_ground_level(natural):
    d = dd.DeformationParams.with_a(0.0, 0.0, natural)
    st = dd.make_state(dd.derive_couplings(natural, d), 1, 0, dd.Branch.plus)
    rec = dd.energy_exact(st, natural, d)
    assert rec.e_closed == pytest.approx(math.sqrt(0.75), abs=1e-14)
    assert rec.bound_ok


def test_deformed_level_and_numeric(natural):
    d = dd.DeformationParams.with_a(0.01, 0.02, natural)
    st = dd.make_state(dd.derive_couplings(natural, d), 1, 0, dd.Branch.plus)
    rec = dd.energy_exact(st, natural, d)
    assert rec.e_closed == pytest.approx(0.8807307695378719, abs=1e-13)
    sc = dd.self_consistent_energy(st, natural, d, 2001)
    assert sc.energy == pytest.approx(rec.e_closed, rel=1e-6)
    assert sc.node_count == 0


def test_supercritical_raises():
    hot = dd.PhysicalConstants(1.0, 1.0, 1.0, 2.0)
    d = dd.DeformationParams.with_a(0.0, 0.0, hot)
    cp = dd.derive_couplings(hot, d)
    with pytest.raises(dd.SupercriticalCoupling):
        dd.lambda_eigenvalue(cp, 1, dd.Branch.plus)


def test_fd_levels_match_closed_form():
    eps, exists = dd.eckart_level(1.0, 3.0, 2.0, 0)
    assert eps == -10.0 and exists
    levels = dd.fd_levels(1.0, 3.0, 2.0, 15.0, 4001, 1)
    assert levels[0] == pytest.approx(-10.0, abs=5e-4)


def test_wavefunction_export(natural):
    d = dd.DeformationParams.with_a(0.02, 0.0, natural)
    st = dd.make_state(dd.derive_couplings(natural, d), 1, 1, dd.Branch.minus)
    ws = dd.export_wavefunction(st, natural, d, 1001)
    assert ws["nodes"] == 1
    h = ws["x"][1] - ws["x"][0]
    assert (ws["chi"] ** 2).sum() * h == pytest.approx(1.0, abs=1e-10)
    assert dd.map_r_to_x(ws["r"][57], 0.02) == pytest.approx(ws["x"][57], abs=1e-12)


def test_nonrelativistic_values():
    e, bounded = dd.energy_nonrelativistic(1.0, 1.0, 1.0, 0.1, 0.0, 1, 1.0)
    assert e == pytest.approx(-0.4, abs=1e-14)
    assert bounded
    eqt, _ = dd.energy_qt(1.0, 1.0, 1.0, 0.1, 0, 1.0)
    assert eqt == pytest.approx(e, abs=1e-14)
    assert dd.qt_reconciliation(1.0, 1.0, 1.0, 0.05, 1, 2.0) == pytest.approx(
        dd.energy_qt(1.0, 1.0, 1.0, 0.05, 1, 2.0)[0], abs=1e-14
    )


def test_commutator_residual():
    assert dd.deformed_commutator_residual(0.0, 10.0, 401) <= 1e-12
    r1 = dd.deformed_commutator_residual(0.01, 10.0, 401)
    r2 = dd.deformed_commutator_residual(0.01, 10.0, 801)
    assert r2 < r1
