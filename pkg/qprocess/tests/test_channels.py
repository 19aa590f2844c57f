#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Copyright © 2026 The qprocess authors
#
# This library is free software; you can redistribute it and/or modify it under
# the terms of the GNU Lesser General Public License as published by the Free
# Software Foundation; either version 2.1 of the License, or (at your option)
# any later version.
#
# This library is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more
# details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this library.  If not, see <http://www.gnu.org/licenses/>.

"""
Unit tests for qprocess.channels
"""


# pylint: disable=missing-docstring


from qprocess import channels
from qprocess.channels import ChoiOperator, DensityState, KrausChannel
from qprocess.log import ValidityLog
import numpy as np
from numpy.testing import assert_allclose
import unittest


class TestDensityState(unittest.TestCase):

    def test_valid(self):
        rho = DensityState.diagonal([0.8, 0.2])
        self.assertEqual(rho.dim, 2)
        self.assertEqual(rho.layout.labels, ('S',))
        assert_allclose(rho.eigenvalues(), [0.8, 0.2])

    def test_bad_trace(self):
        with self.assertRaisesRegex(ValueError, 'trace'):
            DensityState(np.diag([0.5, 0.4]))

    def test_negative(self):
        with self.assertRaisesRegex(ValueError, 'negative eigenvalue'):
            DensityState(np.diag([1.5, -0.5]))

    def test_not_hermitian(self):
        with self.assertRaises(ValueError):
            DensityState(np.array([[0.5, 0.5], [0.0, 0.5]]))

    def test_from_vector(self):
        rho = DensityState.from_vector(np.array([1.0, 1.0]) / np.sqrt(2))
        assert_allclose(rho.matrix, np.full((2, 2), 0.5))


class TestThermalization(unittest.TestCase):
    """Both orders of T_q and R_{p,1} map diag(r, 1−r) to diag(p, 1−p)."""

    def test_grid(self):
        for p in (0.2, 0.5, 0.8):
            for q in (0.0, 0.5, 1.0):
                gad = channels.gad(p, 1.0)
                flip = channels.phase_flip(q)
                for r in np.linspace(0.0, 1.0, 11):
                    rho = DensityState.diagonal([r, 1 - r])
                    expected = np.diag([p, 1 - p])
                    for ch in (channels.compose(flip, gad),
                               channels.compose(gad, flip)):
                        out = channels.apply_kraus(ch, rho)
                        assert_allclose(out.matrix, expected, atol=1e-10)


class TestKnownChannels(unittest.TestCase):

    def test_gad_partial(self):
        # λ = 0 is the identity.
        rho = channels.random_state(2, np.random.default_rng(0))
        out = channels.apply_kraus(channels.gad(0.3, 0.0), rho)
        assert_allclose(out.matrix, rho.matrix, atol=1e-12)

    def test_gad_invalid(self):
        with self.assertRaises(ValueError):
            channels.gad(1.2, 0.5)
        with self.assertRaises(ValueError):
            channels.gad(0.5, -0.1)

    def test_phase_flip_dephases(self):
        plus = DensityState.from_vector(np.array([1.0, 1.0]) / np.sqrt(2))
        out = channels.apply_kraus(channels.phase_flip(0.5), plus)
        assert_allclose(out.matrix, np.eye(2) / 2, atol=1e-12)

    def test_replacement(self):
        sigma = DensityState.diagonal([0.3, 0.7])
        ch = channels.replacement_channel(sigma, 3)
        self.assertTrue(channels.is_cptp(ch)[0])
        rho = channels.random_state(3, np.random.default_rng(1))
        out = channels.apply_kraus(ch, rho)
        assert_allclose(out.matrix, sigma.matrix, atol=1e-12)

    def test_unitary_rejects(self):
        with self.assertRaises(ValueError):
            channels.unitary_channel(np.diag([1.0, 2.0]))

    def test_compose_mismatch(self):
        with self.assertRaises(ValueError):
            channels.compose(channels.identity_channel(3),
                             channels.identity_channel(2))


class TestChoi(unittest.TestCase):

    def test_identity(self):
        j = channels.kraus_to_choi(channels.identity_channel(2))
        wire = np.eye(2).reshape(-1)
        assert_allclose(j.matrix, np.outer(wire, wire))

    def test_apply_agrees(self):
        rng = np.random.default_rng(2)
        for _ in range(5):
            ch = channels.random_channel(2, 3, rng)
            rho = channels.random_state(2, rng)
            direct = channels.apply_kraus(ch, rho)
            via_choi = channels.apply_via_choi(channels.kraus_to_choi(ch),
                                               rho)
            assert_allclose(via_choi.matrix, direct.matrix, atol=1e-12)

    def test_choi_to_kraus(self):
        rng = np.random.default_rng(3)
        ch = channels.random_channel(2, 2, rng, env_dim=3)
        back = channels.choi_to_kraus(channels.kraus_to_choi(ch))
        rho = channels.random_state(2, rng)
        assert_allclose(channels.apply_kraus(back, rho).matrix,
                        channels.apply_kraus(ch, rho).matrix, atol=1e-10)

    def test_trace(self):
        j = channels.kraus_to_choi(channels.gad(0.3, 0.4))
        self.assertAlmostEqual(np.trace(j.matrix).real, 2.0)


class TestIsCptp(unittest.TestCase):

    def test_valid_channels(self):
        rng = np.random.default_rng(4)
        for ch in (channels.gad(0.8, 1.0), channels.phase_flip(0.3),
                   channels.random_channel(2, 2, rng)):
            self.assertEqual(channels.is_cptp(ch), (True, None))
            self.assertEqual(channels.is_cptp(channels.kraus_to_choi(ch)),
                             (True, None))

    def test_not_trace_preserving(self):
        log = ValidityLog()
        ch = KrausChannel([np.diag([1.0, 0.5])])
        passed, diagnostic = channels.is_cptp(ch, log=log)
        self.assertFalse(passed)
        self.assertIn('not trace preserving', diagnostic)
        self.assertEqual(log.codes(), ['not-trace-preserving'])

    def test_not_psd(self):
        log = ValidityLog()
        j = channels.kraus_to_choi(channels.identity_channel(2))
        bad = ChoiOperator(np.eye(4) - j.matrix, 2, 2)
        passed, _ = channels.is_cptp(bad, log=log)
        self.assertFalse(passed)
        self.assertIn('not-psd', log.codes())

    def test_not_hermitian(self):
        log = ValidityLog()
        matrix = np.eye(4, dtype=complex) / 2
        matrix[0, 1] = 1.0
        passed, _ = channels.is_cptp(ChoiOperator(matrix, 2, 2), log=log)
        self.assertFalse(passed)
        self.assertIn('not-hermitian', log.codes())


class TestRandom(unittest.TestCase):

    def test_deterministic(self):
        a = channels.random_channel(2, 2, np.random.default_rng(9))
        b = channels.random_channel(2, 2, np.random.default_rng(9))
        for (ka, kb) in zip(a.kraus, b.kraus):
            assert_allclose(ka, kb)

    def test_environment_too_small(self):
        with self.assertRaises(ValueError):
            channels.random_channel(4, 2, np.random.default_rng(0),
                                    env_dim=1)


if __name__ == '__main__':
    # Run test suite
    unittest.main()
