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
Maximization of the daemonic ergotropy over the ancilla preparation (x, χ)
and the measurement basis (m, φ).

The search is a seeded multi-start Nelder-Mead simplex. Restart k draws its
start point from `numpy.random.default_rng([seed, k])`, so results do not
depend on how many restarts run or in which order.
"""


import math

import numpy as np
from scipy.optimize import minimize

from qprocess.thermo import (Ergotropy, Hamiltonian, ProtocolResponse,
                             ancilla_state, average_figure, measure_matrix,
                             measurement_basis)


TWO_PI = 2 * math.pi


def _reflect(value, high):
    """Fold value into [0, high] by reflection at both ends."""
    value = math.fmod(value, 2 * high)
    if value < 0:
        value += 2 * high
    if value > high:
        value = 2 * high - value
    return value


def _wrap(value):
    """Fold value into [0, 2π)."""
    value = math.fmod(value, TWO_PI)
    if value < 0:
        value += TWO_PI
    return 0.0 if value >= TWO_PI else value


class ParamVector(object):

    """Protocol parameters: measurement (m, φ) and ancilla (x, χ)."""

    def __init__(self, m, phi, x, chi):
        """
        Construct a new ParamVector, folding values into their domains.

        m and x are reflected into [0, 1] and [0, π]; φ and χ are wrapped
        into [0, 2π).
        """
        self.m = _reflect(float(m), 1.0)
        self.phi = _wrap(float(phi))
        self.x = _reflect(float(x), math.pi)
        self.chi = _wrap(float(chi))

    @classmethod
    def from_array(cls, values):
        """Build from a length-4 array (m, φ, x, χ)."""
        return cls(*values)

    @classmethod
    def plus_minus(cls):
        """Return the |+⟩ preparation with the ± measurement."""
        return cls(0.5, 0.0, math.pi / 2, 0.0)

    @classmethod
    def random(cls, rng):
        """Draw uniformly from the parameter domain."""
        return cls(rng.uniform(0.0, 1.0), rng.uniform(0.0, TWO_PI),
                   rng.uniform(0.0, math.pi), rng.uniform(0.0, TWO_PI))

    def to_array(self):
        """Return the parameters as an array (m, φ, x, χ)."""
        return np.array([self.m, self.phi, self.x, self.chi])

    def __eq__(self, other):
        return (isinstance(other, ParamVector) and
                np.array_equal(self.to_array(), other.to_array()))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'ParamVector(m=%r, phi=%r, x=%r, chi=%r)' % \
               (self.m, self.phi, self.x, self.chi)


class OptConfig(object):

    """Settings of the multi-start search."""

    def __init__(self, restarts=32, seed=7, tolerance=1e-8,
                 max_iterations=2000):
        """
        Construct a new OptConfig.

        Args:
            restarts: int, number of local searches, at least 1
            seed: int, base seed of the start points
            tolerance: float, positive tolerance on the objective change
                ending a local search
            max_iterations: int, iteration cap of each local search
        """
        if restarts < 1:
            raise ValueError('At least one restart is needed, got %i.' %
                             restarts)
        if not tolerance > 0:
            raise ValueError('Tolerance must be positive, got %r.' %
                             tolerance)
        if max_iterations < 1:
            raise ValueError('Iteration cap must be positive, got %i.' %
                             max_iterations)
        self.restarts = int(restarts)
        self.seed = int(seed)
        self.tolerance = float(tolerance)
        self.max_iterations = int(max_iterations)


class RestartTrace(object):

    """Record of one local search."""

    def __init__(self, start, start_value, end, end_value, success, message):
        self.start = start
        self.start_value = start_value
        self.end = end
        self.end_value = end_value
        self.success = success
        self.message = message


class OptResult(object):

    """Outcome of maximize_function()."""

    def __init__(self, value, params, trace, evaluations):
        """
        Construct a new OptResult.

        Args:
            value: float, best value over all restarts
            params: ParamVector achieving it
            trace: list of RestartTrace, in restart order
            evaluations: int, number of objective evaluations
        """
        self.value = value
        self.params = params
        self.trace = trace
        self.evaluations = evaluations


class ProtocolObjective(object):

    """
    The daemonic ergotropy of a protocol as a function of ParamVector.

    The process, slot channels and target are fixed, so the joint output is
    precomputed as a linear function of the ancilla state (see
    ProtocolResponse) and each evaluation only measures a small operator.
    """

    def __init__(self, process, channels, target, wiring=None, h=None):
        self.response = ProtocolResponse(process, channels, target, wiring)
        self.h = h if h is not None else Hamiltonian.qubit()
        if self.h.dim != self.response.target_dim:
            raise ValueError('Hamiltonian of dimension %i does not match the '
                             'target output of dimension %i.' %
                             (self.h.dim, self.response.target_dim))

    def branches(self, params):
        """Return the measurement branches at the given parameters."""
        joint = self.response.joint_matrix(
            ancilla_state(params.x, params.chi).matrix)
        return measure_matrix(joint, self.response.target_dim,
                              measurement_basis(params.m, params.phi))

    def __call__(self, params):
        return average_figure(self.branches(params), Ergotropy(), self.h)

    def evaluate_grid(self, m, phi, x, chi):
        """
        Evaluate on the product grid of four 1-D arrays.

        Uses the homogeneity of the branch ergotropy: for the unnormalized
        branch operator σ̃ = p·σ, p·E(σ) = Tr[Hσ̃] − Σ_k λ_k↓(σ̃) ε_k↑.

        Returns:
            Array of shape (len(m), len(phi), len(x), len(chi)).
        """
        d_t = self.response.target_dim
        d_a = self.response.ancilla_dim
        if d_a != 2:
            raise ValueError('Grid evaluation needs a qubit ancilla.')

        kets = np.stack([np.cos(x / 2)[:, None] * np.ones(len(chi)),
                         np.exp(1j * chi)[None, :] * np.sin(x / 2)[:, None]],
                        axis=-1)
        ancillas = np.einsum('xci,xcj->xcij', kets, kets.conj())
        joints = np.einsum('xcij,ijab->xcab', ancillas, self.response.blocks)
        joints = joints.reshape(len(x), len(chi), d_t, d_a, d_t, d_a)

        a = np.sqrt(m)[:, None] * np.ones(len(phi))
        b = np.sqrt(1 - m)[:, None] * np.ones(len(phi))
        first = np.stack([a, np.exp(1j * phi)[None, :] * b], axis=-1)
        second = np.stack([-np.exp(-1j * phi)[None, :] * b, a], axis=-1)

        energies = np.linalg.eigvalsh(self.h.matrix)
        total = 0.0
        for vectors in (first, second):
            sigma = np.einsum('mpa,xcsatb,mpb->mpxcst', vectors.conj(),
                              joints, vectors)
            sigma = (sigma + np.swapaxes(sigma, -1, -2).conj()) / 2
            energy = np.einsum('st,mpxcts->mpxc', self.h.matrix, sigma).real
            values = np.linalg.eigvalsh(sigma)[..., ::-1]
            passive = np.einsum('...k,k->...', values, energies)
            total = total + np.maximum(0.0, energy - passive)
        return total


def objective(process, channels, target, params, wiring=None, h=None):
    """Return the daemonic ergotropy of the protocol at params."""
    return ProtocolObjective(process, channels, target, wiring, h)(params)


def _ascend(function, start, cfg):
    """Run one Nelder-Mead ascent; return (end, end value, scipy result)."""
    result = minimize(lambda v: -function(ParamVector.from_array(v)),
                      start.to_array(), method='Nelder-Mead',
                      options={'xatol': 1e-6, 'fatol': cfg.tolerance,
                               'maxiter': cfg.max_iterations})
    end = ParamVector.from_array(result.x)
    return end, function(end), result


def maximize_function(function, cfg=None):
    """
    Maximize a function of ParamVector by seeded multi-start Nelder-Mead.

    A restart that ends below its start value keeps its start point, so the
    best value is at least the function value at every start point.

    Args:
        function: callable taking a ParamVector and returning a float
        cfg: OptConfig, or None for the defaults

    Returns:
        An OptResult.
    """
    if cfg is None:
        cfg = OptConfig()
    evaluations = [0]

    def _evaluate(params):
        evaluations[0] += 1
        return float(function(params))

    trace = []
    for restart in range(cfg.restarts):
        rng = np.random.default_rng([cfg.seed, restart])
        start = ParamVector.random(rng)
        start_value = _evaluate(start)
        end, end_value, result = _ascend(_evaluate, start, cfg)
        if not end_value >= start_value:
            end, end_value = start, start_value
        trace.append(RestartTrace(start, start_value, end, end_value,
                                  bool(result.success), str(result.message)))

    best = trace[0]
    for entry in trace[1:]:
        if entry.end_value > best.end_value:
            best = entry
    return OptResult(best.end_value, best.end, trace, evaluations[0])


def maximize(process, channels, target, cfg=None, wiring=None, h=None):
    """
    Maximize the daemonic ergotropy of a protocol.

    Args:
        process: ProcessMatrix, ProcessVector or CombRecipe
        channels: list of slot channels, in slot label order
        target: DensityState of the target
        cfg: OptConfig, or None for the defaults
        wiring: Wiring, or None for the process default
        h: Hamiltonian, or None for H = |1⟩⟨1|

    Returns:
        An OptResult.
    """
    return maximize_function(
        ProtocolObjective(process, channels, target, wiring, h), cfg)


def grid_oracle(process, channels, target, resolution=21, wiring=None, h=None):
    """
    Return the best daemonic ergotropy found by exhaustive grid search.

    The grid has `resolution` points per axis (endpoints included for m and
    x, excluded for the angles φ and χ) and is followed by one Nelder-Mead
    refinement from the best grid point.
    """
    if resolution < 2:
        raise ValueError('Grid resolution must be at least 2, got %i.' %
                         resolution)
    function = ProtocolObjective(process, channels, target, wiring, h)
    axes = (np.linspace(0.0, 1.0, resolution),
            np.linspace(0.0, TWO_PI, resolution, endpoint=False),
            np.linspace(0.0, math.pi, resolution),
            np.linspace(0.0, TWO_PI, resolution, endpoint=False))
    values = function.evaluate_grid(*axes)
    index = np.unravel_index(np.argmax(values), values.shape)
    start = ParamVector(*[axis[i] for (axis, i) in zip(axes, index)])
    _, end_value, _ = _ascend(function, start, OptConfig(restarts=1))
    return max(function(start), end_value)
