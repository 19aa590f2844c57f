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
Unit tests for qsweep.optimizer
"""


# pylint: disable=missing-docstring


from qprocess import channels, processes, thermo
from qprocess.channels import DensityState
from qsweep.optimizer import (OptConfig, ParamVector, ProtocolObjective,
                              grid_oracle, maximize, maximize_function,
                              objective)
import math
import numpy as np
from numpy.testing import assert_allclose
import unittest


def _bowl(params):
    return -(params.m - 0.3) ** 2 - (params.x - 1.0) ** 2


def _switch_objective():
    return ProtocolObjective(processes.w_switch2(),
                             [channels.gad(1 / 3, 0.5),
                              channels.phase_flip(0.2)],
                             DensityState.from_vector([0.6, 0.8]))


class TestParamVector(unittest.TestCase):

    def test_inside_domain(self):
        params = ParamVector(0.25, 1.0, 2.0, 3.0)
        assert_allclose(params.to_array(), [0.25, 1.0, 2.0, 3.0])

    def test_folding(self):
        params = ParamVector(1.2, -0.5, 4.0, 7.0)
        self.assertAlmostEqual(params.m, 0.8)
        self.assertAlmostEqual(params.phi, 2 * math.pi - 0.5)
        self.assertAlmostEqual(params.x, 2 * math.pi - 4.0)
        self.assertAlmostEqual(params.chi, 7.0 - 2 * math.pi)
        self.assertAlmostEqual(ParamVector(-0.1, 0, 0, 0).m, 0.1)

    def test_random_in_domain(self):
        rng = np.random.default_rng(50)
        for _ in range(20):
            params = ParamVector.random(rng)
            self.assertTrue(0.0 <= params.m <= 1.0)
            self.assertTrue(0.0 <= params.phi < 2 * math.pi)
            self.assertTrue(0.0 <= params.x <= math.pi)
            self.assertTrue(0.0 <= params.chi < 2 * math.pi)

    def test_equality(self):
        self.assertEqual(ParamVector.plus_minus(),
                         ParamVector(0.5, 0.0, math.pi / 2, 0.0))
        self.assertNotEqual(ParamVector.plus_minus(),
                            ParamVector(0.5, 0.0, 0.0, 0.0))


class TestOptConfig(unittest.TestCase):

    def test_defaults(self):
        cfg = OptConfig()
        self.assertEqual((cfg.restarts, cfg.seed, cfg.max_iterations),
                         (32, 7, 2000))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            OptConfig(restarts=0)
        with self.assertRaises(ValueError):
            OptConfig(tolerance=0.0)
        with self.assertRaises(ValueError):
            OptConfig(max_iterations=0)


class TestMaximizeFunction(unittest.TestCase):

    def test_bowl(self):
        result = maximize_function(_bowl, OptConfig(restarts=4, seed=1))
        self.assertAlmostEqual(result.params.m, 0.3, delta=1e-3)
        self.assertAlmostEqual(result.params.x, 1.0, delta=1e-3)
        self.assertGreater(result.value, -1e-6)
        self.assertEqual(len(result.trace), 4)
        self.assertGreater(result.evaluations, 4)

    def test_deterministic(self):
        cfg = OptConfig(restarts=3, seed=11)
        first = maximize_function(_bowl, cfg)
        second = maximize_function(_bowl, cfg)
        self.assertEqual(first.value, second.value)
        self.assertEqual(first.params, second.params)

    def test_more_restarts_never_worse(self):
        function = _switch_objective()
        few = maximize_function(function, OptConfig(restarts=2, seed=5,
                                                    max_iterations=300))
        many = maximize_function(function, OptConfig(restarts=4, seed=5,
                                                     max_iterations=300))
        self.assertGreaterEqual(many.value, few.value)
        for (a, b) in zip(few.trace, many.trace):
            self.assertEqual(a.start, b.start)

    def test_restarts_keep_start_value(self):
        result = maximize_function(_switch_objective(),
                                   OptConfig(restarts=3, seed=2,
                                             max_iterations=100))
        for entry in result.trace:
            self.assertGreaterEqual(entry.end_value, entry.start_value)
            self.assertLessEqual(entry.end_value, result.value)


class TestProtocolObjective(unittest.TestCase):

    def test_matches_protocol(self):
        function = _switch_objective()
        params = ParamVector(0.4, 1.1, 0.7, 2.5)
        branches = thermo.run_protocol(
            processes.w_switch2(),
            [channels.gad(1 / 3, 0.5), channels.phase_flip(0.2)],
            DensityState.from_vector([0.6, 0.8]),
            thermo.ancilla_state(params.x, params.chi),
            thermo.measurement_basis(params.m, params.phi))
        expected = thermo.average_figure(branches, thermo.Ergotropy(),
                                         thermo.Hamiltonian.qubit())
        self.assertAlmostEqual(function(params), expected, delta=1e-10)

    def test_grid_matches_calls(self):
        function = _switch_objective()
        m = np.array([0.0, 0.35, 1.0])
        phi = np.array([0.0, 2.0])
        x = np.array([0.4, math.pi / 2])
        chi = np.array([0.0, 1.3, 4.0])
        grid = function.evaluate_grid(m, phi, x, chi)
        self.assertEqual(grid.shape, (3, 2, 2, 3))
        for index in np.ndindex(*grid.shape):
            params = ParamVector(m[index[0]], phi[index[1]], x[index[2]],
                                 chi[index[3]])
            self.assertAlmostEqual(grid[index], function(params), delta=1e-9)

    def test_composition_is_flat(self):
        gad = channels.gad(1 / 3, 0.5)
        flip = channels.phase_flip(0.0)
        target = DensityState.from_vector([0.6, 0.8])
        expected = thermo.ergotropy(
            DensityState(channels.compose(flip, gad).apply_operator(
                target.matrix)),
            thermo.Hamiltonian.qubit())
        result = maximize(processes.w_compose('AB'), [gad, flip], target,
                          OptConfig(restarts=2, max_iterations=100))
        self.assertAlmostEqual(result.value, expected, delta=1e-10)
        self.assertAlmostEqual(
            objective(processes.w_compose('AB'), [gad, flip], target,
                      ParamVector.plus_minus()),
            expected, delta=1e-10)

    def test_wrong_hamiltonian(self):
        with self.assertRaises(ValueError):
            ProtocolObjective(processes.w_switch2(),
                              [channels.identity_channel()] * 2,
                              DensityState.maximally_mixed(2),
                              h=thermo.Hamiltonian(np.diag([0.0, 1.0, 2.0])))


class TestGridOracle(unittest.TestCase):

    def test_bounds_grid(self):
        function = _switch_objective()
        best = grid_oracle(processes.w_switch2(),
                           [channels.gad(1 / 3, 0.5),
                            channels.phase_flip(0.2)],
                           DensityState.from_vector([0.6, 0.8]),
                           resolution=5)
        axes = (np.linspace(0.0, 1.0, 5),
                np.linspace(0.0, 2 * math.pi, 5, endpoint=False),
                np.linspace(0.0, math.pi, 5),
                np.linspace(0.0, 2 * math.pi, 5, endpoint=False))
        self.assertGreaterEqual(best,
                                function.evaluate_grid(*axes).max() - 1e-9)

    def test_resolution(self):
        with self.assertRaises(ValueError):
            grid_oracle(processes.w_switch2(),
                        [channels.identity_channel()] * 2,
                        DensityState.maximally_mixed(2), resolution=1)


if __name__ == '__main__':
    # Run test suite
    unittest.main()
