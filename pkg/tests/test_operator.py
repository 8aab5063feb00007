import numpy as np
import pytest

from gpsrad.eig import eigs_symmetric
from gpsrad.mapping import RadialMap
from gpsrad.observables import count_nodes, normalize
from gpsrad.operator import (
    UnitConvention,
    assemble,
    effective_potential,
    reconstruct_wavefunction,
    symmetrized_d2,
)
from gpsrad.orthopoly import lgl_grid
from gpsrad.potentials import AnharmonicOscillator, Morse, PowerLaw
from gpsrad.spectrum import solve

AU, H2M = UnitConvention.AU, UnitConvention.HBAR2M1
COULOMB = PowerLaw(A=1.0, nu=-1.0)


def test_convention_coefficients():
    assert AU.kinetic_coefficient == 0.5
    assert H2M.kinetic_coefficient == 1.0
    assert UnitConvention("hbar2m1") is H2M


def test_effective_potential():
    assert effective_potential(Morse(), 0, 2.5, AU) == Morse()(2.5)
    assert effective_potential(COULOMB, 1, 2.0, AU) == pytest.approx(-0.25)
    assert effective_potential(COULOMB, 1, 2.0, H2M) == pytest.approx(0.0)


def test_symmetrized_d2_identity_map():
    g = lgl_grid(12)
    m, asym = symmetrized_d2(g, jacobian=1.0)
    inner = slice(1, 12)
    p = g.pn_values[inner]
    # with unit Jacobian this is the interior block of d2 under the P_N similarity
    raw = g.d2[inner, inner] * p[None, :] / p[:, None]
    np.testing.assert_allclose(m, raw, rtol=1e-14)
    assert asym < 1e-12


def test_symmetrized_d2_asymmetry_diagnostic():
    g = lgl_grid(100)
    _, asym = symmetrized_d2(g, RadialMap.from_rmax_alpha(50, 2))
    assert asym <= 1e-8


def test_assemble_is_bitwise_symmetric_and_diagonal_identity():
    g = lgl_grid(60)
    rmap = RadialMap.from_rmax_alpha(40, 0.5)
    prob = assemble(g, rmap, Morse(), ell=2, convention=AU)
    h = prob.matrix
    assert h.shape == (59, 59)
    assert np.array_equal(h, h.T)
    sym, _ = symmetrized_d2(g, rmap)
    x = g.nodes[1:-1]
    r = rmap.forward(x)
    diag_extra = np.diag(h) - (-0.5 * np.diag(sym))
    np.testing.assert_allclose(diag_extra, effective_potential(Morse(), 2, r, AU) + rmap.vm(x), rtol=1e-12)


def test_morse_ground_state_small_box():
    res = solve(Morse(), 0, 1, N=200, r_max=50, convention=AU)
    assert res.energies[0] == pytest.approx(-18.428932188134, abs=1e-10)


def test_harmonic_ground_state():
    res = solve(PowerLaw(1.0, 2.0), 0, 1, convention=H2M)
    assert res.energies[0] == pytest.approx(3.0, abs=1e-8)


def test_coulomb_levels():
    res = solve(COULOMB, 0, 4, convention=H2M)
    n = np.arange(1, 5)
    np.testing.assert_allclose(res.energies, -1 / (4 * n**2), atol=1e-9)


def test_reconstruct_boundary_and_coulomb_shape():
    g = lgl_grid(300)
    rmap = RadialMap.from_rmax_alpha(200, 0.25)
    prob = assemble(g, rmap, COULOMB, 0, AU)
    dec = eigs_symmetric(prob.matrix, 1)
    u = reconstruct_wavefunction(prob, dec.vectors[:, 0])
    assert u[0] == 0.0 and u[-1] == 0.0
    u = normalize(u, g, rmap)
    r = rmap.forward(g.nodes)
    exact = 2 * r * np.exp(-r)
    assert np.abs(u - exact).max() <= 1e-7


def test_reconstruct_sign_convention():
    g = lgl_grid(80)
    rmap = RadialMap.from_rmax_alpha(30, 0.5)
    prob = assemble(g, rmap, AnharmonicOscillator(lam=2.0), 0, AU)
    dec = eigs_symmetric(prob.matrix, 4)
    for k in range(4):
        for sign in (1.0, -1.0):
            u = reconstruct_wavefunction(prob, sign * dec.vectors[:, k])
            first = u[np.abs(u) > 1e-10 * np.abs(u).max()][0]
            assert first > 0


def test_sqrt_ladder_node_counts():
    res = solve(PowerLaw(1.0, 0.5), 0, 8, convention=H2M)
    assert [count_nodes(s.u) for s in res.states] == list(range(8))


def test_l_ordering():
    for pot, conv in ((PowerLaw(1.0, 0.5), H2M), (Morse(), AU)):
        spectra = [solve(pot, ell, 3, convention=conv).energies for ell in range(4)]
        depth = min(len(s) for s in spectra)
        for n in range(depth):
            col = [s[n] for s in spectra]
            assert np.all(np.diff(col) > 0)


@pytest.mark.parametrize(
    "pot, conv", [(PowerLaw(1.0, 0.5), H2M), (AnharmonicOscillator(lam=2.0), AU), (COULOMB, H2M)]
)
def test_cauchy_convergence(pot, conv):
    # the change between successive grids shrinks (or is already at rounding level)
    orders = [150, 200, 250, 300, 350]
    r_max = 20.0 if isinstance(pot, AnharmonicOscillator) else 200.0
    alpha = 0.2 if isinstance(pot, AnharmonicOscillator) else 0.25
    e = [solve(pot, 0, 3, N=n, r_max=r_max, alpha=alpha, convention=conv).energies for n in orders]
    diffs = [np.abs(e[i + 1] - e[i]).max() for i in range(len(orders) - 1)]
    floor = 1e-11 * max(1.0, np.abs(e[-1]).max())
    for a, b in zip(diffs, diffs[1:]):
        assert b <= a or b <= floor
