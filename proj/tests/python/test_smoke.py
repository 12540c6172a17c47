# Copyright 2026 The qrnet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import qrnet


def test_kron_shapes():
    a = np.eye(2, dtype=complex)
    b = np.diag([1.0 + 0j, 2.0, 3.0])
    k = qrnet.kron(a, b)
    assert k.shape == (6, 6)
    assert np.allclose(np.diag(k), [1, 2, 3, 1, 2, 3])


def test_lowering_op_matches_truncated_annihilator():
    a = qrnet.lowering_op(4)
    expected = np.zeros((4, 4), dtype=complex)
    for n in range(1, 4):
        expected[n - 1, n] = math.sqrt(n)
    assert np.allclose(a, expected)


def test_singlet_counts():
    assert [qrnet.singlet_count(n) for n in (2, 4, 6)] == [1, 2, 5]


def test_singlet_basis_annihilated_by_total_spin():
    basis = qrnet.singlet_basis(4)
    s2 = qrnet.total_spin_squared(4)
    assert basis.shape == (16, 2)
    assert np.linalg.norm(s2 @ basis) < 1e-10
    sm = qrnet.total_spin(4, "minus")
    assert np.linalg.norm(sm @ basis) < 1e-10


def test_bell_log_negativity_is_one():
    psi = np.zeros(4, dtype=complex)
    psi[0] = psi[3] = 1 / math.sqrt(2)
    rho = np.outer(psi, psi.conj())
    assert qrnet.log_negativity(rho, [2, 2]) == pytest.approx(1.0, abs=1e-12)


def test_mean_occupation_reference_point():
    n_bar, beta = qrnet.mean_occupation(0.9, 0.5)
    assert n_bar == pytest.approx(0.6238224338765966, abs=1e-12)
    assert beta == pytest.approx(0.9566724092187296, abs=1e-12)


def test_propagate_preserves_trace_and_decays():
    # single qubit, pure decay from the excited state
    h = np.zeros((2, 2), dtype=complex)
    b = qrnet.lowering_op(2)
    rho0 = np.diag([0.0 + 0j, 1.0])
    rho_t = qrnet.propagate(rho0, h, [(b, 1.0)], 0.7)
    assert np.trace(rho_t).real == pytest.approx(1.0, abs=1e-9)
    assert rho_t[1, 1].real == pytest.approx(math.exp(-0.7), abs=1e-6)


def test_random_teacher_labels():
    rho, label, logneg = qrnet.random_teacher(11, "two_qubit", True)
    assert label == 1
    assert logneg >= 0.15
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    rho_p, label_p, logneg_p = qrnet.random_teacher(11, "two_qubit", False)
    assert label_p == 0
    assert logneg_p == pytest.approx(0.0, abs=1e-10)


def test_fit_linear_readout_two_points():
    feats = np.array([[0.0], [1.0]])
    w, bias = qrnet.fit_linear_readout(feats, [0, 1])
    assert w[0] == pytest.approx(1.0, abs=1e-10)
    assert bias == pytest.approx(0.0, abs=1e-10)
