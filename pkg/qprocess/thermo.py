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
Thermodynamic figures of merit and the measure-the-ancilla protocol.

In the protocol a target state and a pure ancilla enter the global past of a
process, the ancilla part of the global future is measured projectively, and
each outcome leaves a conditional target state. Figures of merit (free
energy, ergotropy) are averaged over the outcomes.
"""


import math

import numpy as np

from qprocess import tensor
from qprocess.channels import DensityState
from qprocess.processes import Wiring
from qprocess.tensor import SystemLayout


# Branches less likely than this are not conditioned on.
BRANCH_THRESHOLD = 1e-12

# Orthonormality tolerance of measurement bases.
BASIS_TOLERANCE = 1e-9


class Hamiltonian(object):

    """A Hermitian energy operator, with ħ = 1."""

    def __init__(self, matrix):
        matrix = tensor.as_matrix(matrix)
        if not tensor.is_hermitian(matrix):
            raise ValueError('Hamiltonian is not Hermitian.')
        self.matrix = matrix

    @classmethod
    def qubit(cls):
        """Return H = |1⟩⟨1|."""
        return cls(np.diag([0.0, 1.0]))

    @property
    def dim(self):
        """Dimension of the system."""
        return self.matrix.shape[0]

    def energy(self, rho):
        """Return Tr[H ρ]."""
        _check_same_space(rho, self)
        return np.trace(self.matrix @ rho.matrix).real


def _check_same_space(rho, h):
    if rho.dim != h.dim:
        raise ValueError('State of dimension %i does not match Hamiltonian of '
                         'dimension %i.' % (rho.dim, h.dim))


class ThermoFigure(object):

    """A figure of merit evaluated on a state, for a given Hamiltonian."""

    # Name used in CSV output and on plot axes.
    name = None

    def __call__(self, rho, h):
        raise NotImplementedError()


class FreeEnergy(ThermoFigure):

    """Non-equilibrium free energy at inverse temperature β."""

    name = 'free-energy'

    def __init__(self, beta):
        if not math.isfinite(beta) or beta <= 0:
            raise ValueError('Inverse temperature must be finite and '
                             'positive, got %r.' % beta)
        self.beta = beta

    def __call__(self, rho, h):
        return free_energy(rho, h, self.beta)


class Ergotropy(ThermoFigure):

    """Maximum work extractable by a cyclic unitary."""

    name = 'ergotropy'

    def __call__(self, rho, h):
        return ergotropy(rho, h)


class MeasurementBasis(object):

    """
    A complete projective measurement with rank-1 projectors.

    Construct with measurement_basis() for the qubit family used by the
    protocol, or directly from a list of orthonormal vectors.
    """

    def __init__(self, vectors):
        vectors = [np.asarray(v, dtype=np.complex128).reshape(-1)
                   for v in vectors]
        dim = len(vectors[0]) if vectors else 0
        if len(vectors) != dim or any(len(v) != dim for v in vectors):
            raise ValueError('A complete basis needs %i vectors of dimension '
                             '%i.' % (dim, dim))
        gram = np.array([[np.vdot(a, b) for b in vectors] for a in vectors])
        error = np.abs(gram - np.eye(dim)).max()
        if error > BASIS_TOLERANCE:
            raise ValueError('Measurement vectors are not orthonormal (error '
                             '%.3g).' % error)
        self.vectors = vectors
        self.projectors = [tensor.projector(v) for v in vectors]

    @property
    def dim(self):
        """Dimension of the measured system."""
        return len(self.vectors)


class Branch(object):

    """One measurement outcome: its probability and conditional state."""

    def __init__(self, probability, state, placeholder=False):
        """
        Construct a new Branch.

        Args:
            probability: float, outcome probability
            state: DensityState of the target conditioned on the outcome
            placeholder: bool, True if the outcome was too unlikely to
                condition on; the state is then the maximally mixed state
        """
        self.probability = probability
        self.state = state
        self.placeholder = placeholder

    def __repr__(self):
        return 'Branch(%.12g, placeholder=%r)' % (self.probability,
                                                  self.placeholder)


def von_neumann_entropy(rho):
    """Return S(ρ) = −Tr[ρ log₂ ρ] in bits, with 0·log 0 = 0."""
    values = rho.eigenvalues()
    values = values[values > 0]
    return max(0.0, float(-np.sum(values * np.log2(values))))


def thermal_state(h, beta, base=2):
    """
    Return the Gibbs state `base^(−βH) / Tr[base^(−βH)]`.

    The default base 2 pairs with `beta_from_gad()`, so that for H = |1⟩⟨1|
    the GAD fixed point diag(p, 1 − p) is thermal at β = log₂(p/(1 − p)).
    Pass `base=math.e` for the state minimizing free_energy() at β.
    """
    if not math.isfinite(beta):
        raise ValueError('Inverse temperature must be finite, got %r.' % beta)
    values, vectors = tensor.herm_eig(h.matrix)
    exponents = -beta * math.log(base) * values
    weights = np.exp(exponents - exponents.max())
    weights /= weights.sum()
    return DensityState((vectors * weights) @ vectors.conj().T)


def beta_from_gad(p):
    """Return β = log₂(p/(1 − p)), the inverse temperature of R_{p,1}."""
    if not 0.0 < p < 1.0:
        raise ValueError('GAD parameter must lie in (0, 1), got %r.' % p)
    return math.log2(p / (1 - p))


def free_energy(rho, h, beta):
    """Return F_β(ρ) = Tr[Hρ] − β⁻¹ ln 2 · S(ρ) with S in bits."""
    if not math.isfinite(beta) or beta <= 0:
        raise ValueError('Inverse temperature must be finite and positive, '
                         'got %r.' % beta)
    return h.energy(rho) - math.log(2) / beta * von_neumann_entropy(rho)


def passive_state(rho, h):
    """
    Return the passive state of ρ.

    The eigenvalues of ρ in descending order are placed on the energy
    eigenvectors of H in ascending order.
    """
    _check_same_space(rho, h)
    populations = rho.eigenvalues()
    _, energy_vectors = tensor.herm_eig(h.matrix)
    energy_vectors = energy_vectors[:, ::-1]
    return DensityState((energy_vectors * populations) @
                        energy_vectors.conj().T, rho.layout)


def ergotropy(rho, h):
    """Return Tr[Hρ] − Tr[H·passive(ρ)], clipped at zero."""
    return max(0.0, h.energy(rho) - h.energy(passive_state(rho, h)))


def measurement_basis(m, phi):
    """
    Return the qubit basis {|M₁⟩, |M₂⟩} with

        |M₁⟩ = √m|0⟩ + e^{iφ}√(1−m)|1⟩,
        |M₂⟩ = −e^{−iφ}√(1−m)|0⟩ + √m|1⟩.
    """
    if not 0.0 <= m <= 1.0:
        raise ValueError('Measurement weight must lie in [0, 1], got %r.' % m)
    a = math.sqrt(m)
    b = math.sqrt(1 - m)
    return MeasurementBasis([
        np.array([a, np.exp(1j * phi) * b]),
        np.array([-np.exp(-1j * phi) * b, a]),
    ])


def ancilla_state(x, chi):
    """Return the pure ancilla cos(x/2)|0⟩ + e^{iχ} sin(x/2)|1⟩."""
    return DensityState.from_vector(
        np.array([math.cos(x / 2), np.exp(1j * chi) * math.sin(x / 2)]),
        SystemLayout([('A', 2)]))


class ProtocolResponse(object):

    """
    The joint target ⊗ ancilla output of a process as a linear function of
    the ancilla input.

    The target state and slot channels are fixed, so the response is stored
    as one output block per ancilla basis operator |i⟩⟨j|. A wiring without
    ancilla systems gives blocks `C(ρ) ⊗ |i⟩⟨j|`.
    """

    def __init__(self, process, channels, target, wiring=None, ancilla_dim=2):
        """
        Construct a new ProtocolResponse.

        Args:
            process: ProcessMatrix, ProcessVector or CombRecipe
            channels: list of slot channels, in slot label order
            target: DensityState fed to the target input
            wiring: Wiring, or None for Wiring.for_process(process)
            ancilla_dim: int, ancilla dimension when it bypasses the process
        """
        if wiring is None:
            wiring = Wiring.for_process(process)
        wiring.check(process)
        past = dict(process.past)
        if target.dim != past[wiring.target_in]:
            raise ValueError('Target of dimension %i does not fit ‘%s’ of '
                             'dimension %i.' % (target.dim, wiring.target_in,
                                                past[wiring.target_in]))
        if not wiring.bypass:
            ancilla_dim = past[wiring.ancilla_in]
        self.wiring = wiring
        self.ancilla_dim = ancilla_dim
        self.target_dim = dict(process.future)[wiring.target_out]

        output_map = process.output_map(channels)
        layout = process.future_layout
        kept = layout.without(wiring.discard)

        def _reduce(output):
            output = tensor.partial_trace(output, layout, wiring.discard)
            if wiring.bypass:
                return output
            return tensor.permute_systems(output, kept, [wiring.target_out,
                                                         wiring.ancilla_out])

        def _past_operator(ancilla):
            factors = []
            for (label, _) in process.past:
                if label == wiring.target_in:
                    factors.append(target.matrix)
                elif label == wiring.ancilla_in:
                    factors.append(ancilla)
                else:
                    factors.append(tensor.projector(wiring.auxiliary[label]))
            return tensor.kron_all(factors)

        blocks = np.zeros((ancilla_dim, ancilla_dim,
                           self.target_dim * ancilla_dim,
                           self.target_dim * ancilla_dim),
                          dtype=np.complex128)
        if wiring.bypass:
            output = _reduce(output_map(_past_operator(None)))
            for i in range(ancilla_dim):
                for j in range(ancilla_dim):
                    unit = np.zeros((ancilla_dim, ancilla_dim))
                    unit[i, j] = 1.0
                    blocks[i, j] = np.kron(output, unit)
        else:
            for i in range(ancilla_dim):
                for j in range(ancilla_dim):
                    unit = np.zeros((ancilla_dim, ancilla_dim),
                                    dtype=np.complex128)
                    unit[i, j] = 1.0
                    blocks[i, j] = _reduce(output_map(_past_operator(unit)))
        self.blocks = blocks

    def joint_matrix(self, ancilla):
        """Return the joint output matrix for an ancilla operator."""
        ancilla = tensor.as_matrix(ancilla)
        if ancilla.shape != (self.ancilla_dim, self.ancilla_dim):
            raise ValueError('Ancilla of shape %s does not match dimension '
                             '%i.' % (ancilla.shape, self.ancilla_dim))
        return np.einsum('ij,ijab->ab', ancilla, self.blocks)

    def joint_state(self, ancilla):
        """Return the joint output DensityState for an ancilla state."""
        return DensityState(self.joint_matrix(ancilla.matrix),
                            SystemLayout([('S', self.target_dim),
                                          ('A', self.ancilla_dim)]))


def protocol_joint_state(process, channels, target, ancilla, wiring=None):
    """Return the pre-measurement target ⊗ ancilla state of the protocol."""
    response = ProtocolResponse(process, channels, target, wiring,
                                ancilla.dim)
    return response.joint_state(ancilla)


def _conditional_state(unnormalized, probability):
    """Normalize a branch operator, removing rounding noise."""
    matrix = (unnormalized + unnormalized.conj().T) / (2 * probability)
    values, vectors = tensor.herm_eig(matrix)
    values = np.clip(values, 0.0, None)
    values /= values.sum()
    return DensityState((vectors * values) @ vectors.conj().T)


def measure_matrix(joint, target_dim, basis):
    """
    Measure the second factor of a target ⊗ ancilla operator.

    Returns:
        list of Branch, one per basis vector.
    """
    ancilla_dim = basis.dim
    if joint.shape != (target_dim * ancilla_dim, target_dim * ancilla_dim):
        raise ValueError('Joint operator of shape %s is not bipartite over '
                         'dimensions %i ⊗ %i.' % (joint.shape, target_dim,
                                                  ancilla_dim))
    blocks = joint.reshape(target_dim, ancilla_dim, target_dim, ancilla_dim)
    branches = []
    for vector in basis.vectors:
        # Tr_A[(𝟙 ⊗ |v⟩⟨v|) ρ] = ⟨v|ρ|v⟩ on the ancilla.
        unnormalized = np.einsum('a,iajb,b->ij', vector.conj(), blocks,
                                 vector)
        probability = np.trace(unnormalized).real
        if probability < BRANCH_THRESHOLD:
            branches.append(Branch(0.0, DensityState.maximally_mixed(
                target_dim), placeholder=True))
        else:
            branches.append(Branch(probability,
                                   _conditional_state(unnormalized,
                                                      probability)))
    return branches


def measure_ancilla(joint, basis):
    """Measure the ancilla of a bipartite DensityState; see measure_matrix()."""
    if joint.dim % basis.dim != 0:
        raise ValueError('State of dimension %i is not bipartite with an '
                         'ancilla of dimension %i.' % (joint.dim, basis.dim))
    return measure_matrix(joint.matrix, joint.dim // basis.dim, basis)


def run_protocol(process, channels, target, ancilla, basis, wiring=None):
    """
    Run the measure-the-ancilla protocol.

    Args:
        process: ProcessMatrix, ProcessVector or CombRecipe
        channels: list of slot channels, in slot label order
        target: DensityState of the target
        ancilla: pure DensityState of the ancilla
        basis: MeasurementBasis on the ancilla output
        wiring: Wiring, or None for the process default

    Returns:
        list of Branch, one per basis vector.
    """
    joint = protocol_joint_state(process, channels, target, ancilla, wiring)
    return measure_ancilla(joint, basis)


def average_figure(branches, figure, h):
    """Return Σ_j p_j · figure(σ_j); placeholder branches contribute 0."""
    return sum(branch.probability * figure(branch.state, h)
               for branch in branches if not branch.placeholder)


def daemonic_ergotropy(rho_sa, h, basis):
    """
    Return the ergotropy of the system averaged over ancilla outcomes.

    Args:
        rho_sa: DensityState on system ⊗ ancilla
        h: Hamiltonian of the system
        basis: MeasurementBasis on the ancilla
    """
    if rho_sa.dim != h.dim * basis.dim:
        raise ValueError('State of dimension %i is not bipartite over '
                         'dimensions %i ⊗ %i.' % (rho_sa.dim, h.dim,
                                                  basis.dim))
    return average_figure(measure_ancilla(rho_sa, basis), Ergotropy(), h)
