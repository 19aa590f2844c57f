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
Quantum states and channels in Kraus and Choi representations.

The Choi operator of a channel `ch` from `din` to `dout` dimensions is

    J = Σ_ij |i⟩⟨j| ⊗ ch(|i⟩⟨j|)

with the input factor first. Its pure form for the identity channel is the
unnormalized vector `|𝟙⟩⟩ = Σ_i |i⟩ ⊗ |i⟩`, so `Tr J = din`.

Kraus sets are never canonicalized: two channels are equal when they act
identically on a spanning set of inputs.
"""


import numpy as np

from qprocess import tensor
from qprocess.tensor import SystemLayout


# Tolerances for state and channel invariants.
STATE_TOLERANCE = 1e-9
CPTP_TOLERANCE = 1e-8

IDENTITY = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def _check_probability(name, value):
    if not 0.0 <= value <= 1.0:
        raise ValueError('Parameter ‘%s’ must lie in [0, 1], got %r.' %
                         (name, value))


class DensityState(object):

    """
    A density operator: Hermitian, positive semi-definite, unit trace.

    The matrix is annotated by a SystemLayout; a state built without one gets
    a single system labelled `S`.
    """

    def __init__(self, matrix, layout=None):
        """
        Construct a new DensityState.

        Args:
            matrix: square complex matrix
            layout: SystemLayout of the matrix, or None

        Raises:
            ValueError: if the matrix is not a valid density operator within
                STATE_TOLERANCE.
        """
        matrix = tensor.as_matrix(matrix)
        if layout is None:
            layout = SystemLayout([('S', matrix.shape[0])])
        if matrix.shape != (layout.dim, layout.dim):
            raise ValueError('State of shape %s does not match layout of '
                             'dimension %i.' % (matrix.shape, layout.dim))
        if not tensor.is_hermitian(matrix, STATE_TOLERANCE):
            raise ValueError('State is not Hermitian.')
        trace = np.trace(matrix).real
        if abs(trace - 1.0) > STATE_TOLERANCE:
            raise ValueError('State has trace %.12g, expected 1.' % trace)
        lowest = np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)[0]
        if lowest < -STATE_TOLERANCE:
            raise ValueError('State has negative eigenvalue %.3g.' % lowest)

        self.matrix = matrix
        self.layout = layout

    @classmethod
    def from_vector(cls, vector, layout=None):
        """Return the pure state `|v⟩⟨v|`."""
        return cls(tensor.projector(vector), layout)

    @classmethod
    def diagonal(cls, populations, layout=None):
        """Return the state diagonal in the computational basis."""
        return cls(np.diag(np.asarray(populations, dtype=np.complex128)),
                   layout)

    @classmethod
    def maximally_mixed(cls, dim, layout=None):
        """Return `𝟙/dim`."""
        return cls(np.eye(dim, dtype=np.complex128) / dim, layout)

    @property
    def dim(self):
        """Dimension of the state space."""
        return self.matrix.shape[0]

    def eigenvalues(self):
        """Eigenvalues in descending order with tiny negatives clipped."""
        values, _ = tensor.herm_eig(self.matrix)
        return tensor.clip_eigenvalues(values)

    def relabelled(self, layout):
        """Return the same state annotated by a different layout."""
        return DensityState(self.matrix, layout)

    def __repr__(self):
        return 'DensityState(%r, %r)' % (self.matrix, self.layout)


class KrausChannel(object):

    """
    A channel given by Kraus operators `K_i`, each `dout × din`.

    Construction only checks shapes; use is_cptp() to check trace
    preservation.
    """

    def __init__(self, kraus):
        """
        Construct a new KrausChannel.

        Args:
            kraus: non-empty sequence of equally-shaped matrices
        """
        kraus = tuple(tensor.as_matrix(k) for k in kraus)
        if not kraus:
            raise ValueError('A channel needs at least one Kraus operator.')
        shape = kraus[0].shape
        for k in kraus:
            if k.shape != shape:
                raise ValueError('Kraus operators have mismatched shapes '
                                 '%s and %s.' % (shape, k.shape))
        self.kraus = kraus
        self.dout, self.din = shape

    def apply_operator(self, x):
        """Return `Σ K x K†` for any (not necessarily positive) operator."""
        return sum(k @ x @ k.conj().T for k in self.kraus)

    def __repr__(self):
        return 'KrausChannel(din=%i, dout=%i, %i operators)' % \
               (self.din, self.dout, len(self.kraus))


class ChoiOperator(object):

    """
    A channel given by its Choi operator, ordered input ⊗ output.

    Construction only checks shapes; use is_cptp() to check positivity and
    trace preservation.
    """

    def __init__(self, matrix, din, dout,
                 input_label='in', output_label='out'):
        """
        Construct a new ChoiOperator.

        Args:
            matrix: square matrix of dimension din·dout
            din: int, input dimension
            dout: int, output dimension
            input_label: str, label of the input factor
            output_label: str, label of the output factor
        """
        matrix = tensor.as_matrix(matrix)
        if matrix.shape != (din * dout, din * dout):
            raise ValueError('Choi matrix of shape %s does not match '
                             'din=%i, dout=%i.' % (matrix.shape, din, dout))
        self.matrix = matrix
        self.din = din
        self.dout = dout
        self.layout = SystemLayout([(input_label, din), (output_label, dout)])

    def apply_operator(self, x):
        """Return `Tr_in[(xᵀ ⊗ 𝟙) J]` for any operator x on the input."""
        tensor4 = self.matrix.reshape(self.din, self.dout, self.din, self.dout)
        return np.einsum('ji,joip->op', x, tensor4)

    def __repr__(self):
        return 'ChoiOperator(din=%i, dout=%i)' % (self.din, self.dout)


def _output_layout(ch, rho):
    if ch.dout == ch.din:
        return rho.layout
    return SystemLayout([('out', ch.dout)])


def apply_kraus(ch, rho):
    """Apply a Kraus channel to a DensityState."""
    if rho.dim != ch.din:
        raise ValueError('Channel input dimension %i does not match state '
                         'dimension %i.' % (ch.din, rho.dim))
    return DensityState(ch.apply_operator(rho.matrix), _output_layout(ch, rho))


def apply_via_choi(j, rho):
    """Apply a channel given by its Choi operator to a DensityState."""
    if rho.dim != j.din:
        raise ValueError('Choi input dimension %i does not match state '
                         'dimension %i.' % (j.din, rho.dim))
    return DensityState(j.apply_operator(rho.matrix), _output_layout(j, rho))


def identity_channel(dim=2):
    """Return the identity channel on a dim-level system."""
    return KrausChannel([np.eye(dim, dtype=np.complex128)])


def gad(p, lam):
    """
    Return the generalized amplitude damping channel R_{p,λ}.

    At λ = 1 every input is mapped to diag(p, 1 − p).
    """
    _check_probability('p', p)
    _check_probability('lambda', lam)
    return KrausChannel([
        np.sqrt(p) * np.diag([1.0, np.sqrt(1 - lam)]),
        np.sqrt(1 - p) * np.diag([np.sqrt(1 - lam), 1.0]),
        np.sqrt(p * lam) * np.array([[0, 1], [0, 0]]),
        np.sqrt((1 - p) * lam) * np.array([[0, 0], [1, 0]]),
    ])


def phase_flip(q):
    """Return the phase flip channel T_q with Kraus {√q 𝟙, √(1−q) σz}."""
    _check_probability('q', q)
    return KrausChannel([np.sqrt(q) * IDENTITY, np.sqrt(1 - q) * PAULI_Z])


def unitary_channel(u):
    """Return the single-Kraus channel `ρ ↦ u ρ u†`."""
    u = tensor.as_matrix(u)
    if u.shape[0] != u.shape[1]:
        raise ValueError('Unitary must be square, got shape %s.' % (u.shape,))
    error = np.linalg.norm(u @ u.conj().T - np.eye(u.shape[0]))
    if error > STATE_TOLERANCE:
        raise ValueError('Operator is not unitary (‖UU† − 𝟙‖ = %.3g).' %
                         error)
    return KrausChannel([u])


def replacement_channel(sigma, din):
    """
    Return the channel `X ↦ Tr[X] σ` from a din-level system.

    The Kraus set is `{√λ_k |v_k⟩⟨i|}` over the eigenpairs of σ with
    non-zero eigenvalue and the input basis vectors.
    """
    if not isinstance(sigma, DensityState):
        sigma = DensityState(sigma)
    values, vectors = tensor.herm_eig(sigma.matrix)
    values = tensor.clip_eigenvalues(values)
    kraus = []
    for (value, vector) in zip(values, vectors.T):
        if value <= 0:
            continue
        for i in range(din):
            kraus.append(np.sqrt(value) *
                         np.outer(vector, tensor.ket(i, din)))
    return KrausChannel(kraus)


def kraus_to_choi(ch):
    """Return the Choi operator `Σ_k |K_k⟩⟩⟨⟨K_k|` of a Kraus channel."""
    # |K⟩⟩ = Σ_i |i⟩ ⊗ K|i⟩ has entry K[o, i] at index (i, o).
    vectors = np.array([k.T.reshape(-1) for k in ch.kraus])
    return ChoiOperator(vectors.T @ vectors.conj(), ch.din, ch.dout)


def choi_to_kraus(j, tolerance=1e-12):
    """Return a Kraus set for a positive Choi operator, from its spectrum."""
    values, vectors = tensor.herm_eig(j.matrix)
    kraus = [(np.sqrt(value) * vector).reshape(j.din, j.dout).T
             for (value, vector) in zip(values, vectors.T)
             if value > tolerance]
    if not kraus:
        kraus = [np.zeros((j.dout, j.din), dtype=np.complex128)]
    return KrausChannel(kraus)


def compose(later, earlier):
    """Return the channel `later ∘ earlier` with Kraus set {L_i E_j}."""
    if earlier.dout != later.din:
        raise ValueError('Cannot compose: output dimension %i does not match '
                         'input dimension %i.' % (earlier.dout, later.din))
    return KrausChannel([l @ e for l in later.kraus for e in earlier.kraus])


def is_cptp(ch, tolerance=CPTP_TOLERANCE, log=None):
    """
    Check whether a channel is completely positive and trace preserving.

    Kraus channels are CP by construction, so only trace preservation is
    checked. Choi operators are checked for Hermiticity, positivity and
    `Tr_out J = 𝟙`.

    Args:
        ch: KrausChannel or ChoiOperator
        tolerance: float, absolute tolerance on the violated norm
        log: optional ValidityLog receiving an issue per violation

    Returns:
        `(passed, diagnostic)` where diagnostic is None on success, or a
        message describing the first violated condition.
    """
    issues = []

    if isinstance(ch, KrausChannel):
        total = sum(k.conj().T @ k for k in ch.kraus)
        error = np.linalg.norm(total - np.eye(ch.din))
        if error > tolerance:
            issues.append(('not-trace-preserving',
                           'Channel is not trace preserving '
                           '(‖ΣK†K − 𝟙‖ = %.3g).' % error))
    else:
        matrix = ch.matrix
        if not tensor.is_hermitian(matrix, tolerance):
            issues.append(('not-hermitian',
                           'Choi operator is not Hermitian (error %.3g).' %
                           tensor.hermiticity_error(matrix)))
        else:
            lowest = np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)[0]
            if lowest < -tolerance:
                issues.append(('not-psd',
                               'Choi operator has negative eigenvalue '
                               '%.3g.' % lowest))
        reduced = tensor.partial_trace(matrix, ch.layout, [ch.layout.labels[1]])
        error = np.linalg.norm(reduced - np.eye(ch.din))
        if error > tolerance:
            issues.append(('not-trace-preserving',
                           'Choi operator is not trace preserving '
                           '(‖Tr_out J − 𝟙‖ = %.3g).' % error))

    if log is not None:
        for (code, message) in issues:
            log.log_issue(code, message)

    if issues:
        return False, issues[0][1]
    return True, None


def random_channel(din, dout, rng, env_dim=2):
    """
    Draw a random channel by Stinespring dilation of a Haar unitary.

    The isometry is the first din columns of a Haar unitary on dout·env_dim
    dimensions; its environment slices are the Kraus operators.
    """
    size = dout * env_dim
    if size < din:
        raise ValueError('Environment of dimension %i is too small to dilate '
                         'a %i → %i channel.' % (env_dim, din, dout))
    isometry = tensor.random_unitary(size, rng)[:, :din]
    isometry = isometry.reshape(dout, env_dim, din)
    return KrausChannel([isometry[:, e, :] for e in range(env_dim)])


def random_state(dim, rng, layout=None):
    """Draw a full-rank random density operator from the Ginibre ensemble."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return DensityState(rho / np.trace(rho).real, layout)
