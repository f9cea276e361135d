"""End-to-end acceptance checks for the advertised guarantees.

One test per guarantee, in a fixed order, so the -v report reads as a
checklist. Multi-clause guarantees collect every clause before failing,
which makes a red line self-explanatory: the message lists each unmet
clause together with the computed value.
"""

import numpy as np

from photonpad.channels import choi_block, parity_dephase
from photonpad.designs import (
    clifford12_ensemble,
    frame_potential,
    haar_frame_potential,
    is_k_design,
    key_length,
    pauli_ensemble,
)
from photonpad.fock import PolarizationSpec, SectorStructure, SourceSpec, build_source_state
from photonpad.linalg import dagger, trace_norm
from photonpad.security import (
    AppendixAReference,
    Classification,
    antisymmetric_identity_check,
    leakage,
    reproduce_appendix_b,
    security_report,
)
from photonpad.su2 import block_lift, default_quadrature, haar_channel_apply, haar_choi, lift_symmetric, multiplicity

from conftest import random_density, random_state, random_unitary


def _require(failures, condition, message):
    if not condition:
        failures.append(message)


def test_appendix_a_choi_block_reproduction():
    computed = choi_block(clifford12_ensemble(), 2, 1)
    reference = AppendixAReference().matrix()
    assert np.abs(computed - reference).max() <= 1e-12
    assert abs(np.linalg.norm(computed) ** 2 - 0.5) <= 1e-12


def test_appendix_b_encrypted_state_reproduction(rng):
    result = reproduce_appendix_b(0.6, 0.8, 0.6)
    s = SectorStructure(2)
    expected = np.zeros((6, 6), dtype=complex)
    expected[0, 0] = 0.36
    expected += 0.64 * s.projector(2) / 3
    assert np.abs(result.output - expected).max() <= 1e-12
    for _ in range(20):
        v = random_state(rng, 2)
        assert reproduce_appendix_b(0.6, v[0], v[1]).deviation <= 1e-12


def test_antisymmetric_singlet_identity():
    assert antisymmetric_identity_check() <= 1e-12


def test_haar_oracle_consistency(rng):
    s = SectorStructure(3)
    quad = default_quadrature(3)

    def twirl(rho):
        return quad.average(lambda u: block_lift(u, s) @ rho @ dagger(block_lift(u, s)))

    for _ in range(10):
        rho = random_density(rng, s.total_dim)
        assert np.abs(twirl(rho) - haar_channel_apply(rho, s)).max() <= 1e-8

    def choi_term(u):
        v = block_lift(u, s).reshape(-1)
        return np.outer(v, v.conj())

    assert np.abs(quad.average(choi_term) - haar_choi(s)).max() <= 1e-8


def test_design_certification():
    failures = []
    cl = clifford12_ensemble()
    pauli = pauli_ensemble()

    for k in (1, 2, 3):
        check = is_k_design(cl, k, tol=1e-9)
        _require(
            failures,
            check.passed,
            f"clifford12 expected to pass k={k}: moment deviation {check.moment_deviation:.6g}"
            f" (frame potential {check.frame_potential:.6g}"
            f" vs Haar {check.haar_frame_potential:.6g})",
        )

    fourth = is_k_design(cl, 4, tol=1e-9)
    _require(failures, not fourth.passed, "clifford12 expected to fail k=4")
    _require(
        failures,
        fourth.frame_gap > 0.1,
        f"clifford12 k=4 frame-potential gap {fourth.frame_gap:.6g} not > 0.1",
    )

    _require(failures, is_k_design(pauli, 1, tol=1e-9).passed, "pauli expected to pass k=1")
    second = is_k_design(pauli, 2, tol=1e-9)
    _require(failures, not second.passed, "pauli expected to fail k=2")
    _require(
        failures,
        abs(frame_potential(pauli, 2) - 4.0) <= 1e-9,
        f"pauli second frame potential {frame_potential(pauli, 2):.12g} != 4",
    )

    for k, expected in [(1, 1.0), (2, 2.0), (3, 5.0), (4, 14.0)]:
        value = haar_frame_potential(k)
        _require(
            failures,
            abs(value - expected) <= 1e-10,
            f"Haar frame potential k={k}: {value:.12g} != {expected}",
        )

    assert not failures, "unmet guarantees:\n- " + "\n- ".join(failures)


def test_security_classification():
    failures = []

    pauli1 = security_report(pauli_ensemble(), 1, tol=1e-9)
    _require(
        failures,
        pauli1.classification is Classification.SECURE,
        f"pauli at max_photons=1 expected SECURE, computed {pauli1.classification.value}"
        f" (worst block {pauli1.worst_block} deviates by {pauli1.worst_deviation:.6g};"
        " vacuum-photon cross blocks survive any ensemble of plain unitaries)",
    )

    pauli2 = security_report(pauli_ensemble(), 2, tol=1e-9)
    _require(
        failures,
        pauli2.classification is Classification.INSECURE,
        f"pauli at max_photons=2 expected INSECURE, computed {pauli2.classification.value}",
    )

    cl3 = security_report(clifford12_ensemble(), 3, tol=1e-9)
    _require(
        failures,
        cl3.classification is Classification.PARITY_SECURE,
        f"clifford12 at max_photons=3 expected PARITY_SECURE, computed"
        f" {cl3.classification.value} (a 2-design depolarizes sectors only up to 2 photons)",
    )
    for m in range(4):
        for n in range(4):
            if (m + n) % 2 == 0:
                _require(
                    failures,
                    cl3.deviation(m, n) <= 1e-9,
                    f"same-parity block ({m},{n}) deviation {cl3.deviation(m, n):.6g} > 1e-9",
                )
    _require(
        failures,
        cl3.deviation(2, 1) >= 0.1,
        f"block (2,1) deviation {cl3.deviation(2, 1):.6g} not >= 0.1",
    )

    assert not failures, "unmet guarantees:\n- " + "\n- ".join(failures)


def test_leakage_bounds(rng):
    failures = []

    # polarization is the plaintext: pairs share photon-number amplitudes
    for n in (1, 2, 3):
        s = SectorStructure(n)
        for _ in range(5):
            amps = random_state(rng, n + 1)
            rho_pair = []
            for _ in range(2):
                pol = random_state(rng, 2)
                spec = SourceSpec(PolarizationSpec(pol[0], pol[1]), amps)
                psi = build_source_state(spec, s)
                rho_pair.append(np.outer(psi, psi.conj()))
            value = 0.5 * trace_norm(
                haar_channel_apply(rho_pair[0], s) - haar_channel_apply(rho_pair[1], s)
            )
            _require(
                failures,
                value <= 1e-10,
                f"Haar channel leaked {value:.6g} at max_photons={n}",
            )

    cl = clifford12_ensemble()
    fixed = (0.6, 0.0, 0.8)
    a = SourceSpec(PolarizationSpec(1.0, 0.0), fixed)
    b = SourceSpec(PolarizationSpec(0.0, 1.0), fixed)
    value = leakage(cl, a, b, 2)
    _require(failures, value <= 1e-10, f"fixed-parity sources leaked {value:.6g}")

    mixed = (0.0, 0.6, 0.8)
    a = SourceSpec(PolarizationSpec(1.0, 0.0), mixed)
    b = SourceSpec(PolarizationSpec(0.0, 1.0), mixed)
    plain = leakage(cl, a, b, 2)
    _require(
        failures,
        plain > 1e-3,
        f"mixed-parity orthogonal pair expected to leak > 1e-3, got {plain:.6g}",
    )
    dephased = leakage(cl, a, b, 2, pre_channel=parity_dephase)
    _require(
        failures,
        dephased <= 1e-10,
        f"parity dephasing should stop the leak, got {dephased:.6g}",
    )

    assert not failures, "unmet guarantees:\n- " + "\n- ".join(failures)


def test_representation_properties(rng):
    from test_su2 import closed_form_lift

    unitaries = [random_unitary(rng) for _ in range(50)]
    for i, u in enumerate(unitaries):
        w = unitaries[(i + 1) % len(unitaries)]
        for n in range(6):
            lifted = lift_symmetric(u, n)
            assert np.abs(dagger(lifted) @ lifted - np.eye(n + 1)).max() <= 1e-12
            assert np.abs(lifted - closed_form_lift(u, n)).max() <= 1e-12
            product = lift_symmetric(u @ w, n)
            assert np.abs(product - lifted @ lift_symmetric(w, n)).max() <= 1e-12

    for k in range(1, 9):
        spins = [k / 2 - i for i in range(k // 2 + 1)]
        assert sum(int(2 * s + 1) * multiplicity(k, s) for s in spins) == 2**k


def test_key_length_two_bits():
    assert key_length(pauli_ensemble(), 1) == 2.0
