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
Higher-order processes: supermaps taking one channel per slot to a channel
from the global past to the global future.

A process is represented either by a process matrix (`ProcessMatrix`), by a
process vector for pure processes (`ProcessVector`), or by a `CombRecipe`: a
fixed sequence of channels interleaved with slots and threaded by an
environment.

All process matrices and vectors are stored in canonical system order: past
systems, then the slots in label order with each input before its output,
then future systems. Constructors that build vectors in another order permute
them into canonical order before returning.

The output channel of a process `W` on slot Choi operators `J_k` is

    J_out = Tr_S[W^{T_S} (𝟙_P ⊗ J_1 ⊗ … ⊗ J_n ⊗ 𝟙_F)],

where S is the joint slot system. For process vectors `|w⟩` the contraction
is done on the vector directly, without forming `|w⟩⟨w|`.
"""


from functools import reduce
import itertools

import numpy as np

from qprocess import tensor
from qprocess.channels import (ChoiOperator, DensityState, KrausChannel,
                               IDENTITY, PAULI_X, PAULI_Z, choi_to_kraus,
                               is_cptp, kraus_to_choi, random_channel,
                               unitary_channel)
from qprocess.log import ValidityLog
from qprocess.tensor import SystemLayout


# Tolerance on negative eigenvalues of process matrices, relative to the
# largest eigenvalue.
PSD_TOLERANCE = 1e-9


def ising_hamiltonian():
    """Return H = −σx⊗σx − (𝟙⊗σz + σz⊗𝟙) on target ⊗ ancilla."""
    return -(np.kron(PAULI_X, PAULI_X) +
             np.kron(IDENTITY, PAULI_Z) + np.kron(PAULI_Z, IDENTITY))


def ising_unitary():
    """Return exp(−i H_Ising), with ħ and the time step set to 1."""
    return tensor.exp_hermitian(ising_hamiltonian(), -1j)


class SlotSpec(object):

    """A slot: the position in a process where a channel is plugged in."""

    def __init__(self, label, input_dim=2, output_dim=2):
        """
        Construct a new SlotSpec.

        Args:
            label: str, slot label; its systems are `<label>_I` and
                `<label>_O`
            input_dim: int, dimension of the channel input
            output_dim: int, dimension of the channel output
        """
        if input_dim < 1 or output_dim < 1:
            raise ValueError('Slot ‘%s’ has invalid dimensions %i → %i.' %
                             (label, input_dim, output_dim))
        self.label = label
        self.input = ('%s_I' % label, int(input_dim))
        self.output = ('%s_O' % label, int(output_dim))

    @property
    def input_dim(self):
        """Dimension of the channel input."""
        return self.input[1]

    @property
    def output_dim(self):
        """Dimension of the channel output."""
        return self.output[1]

    @property
    def dim(self):
        """Dimension of the slot's Choi space."""
        return self.input_dim * self.output_dim

    def __eq__(self, other):
        return (isinstance(other, SlotSpec) and
                (self.label, self.input, self.output) ==
                (other.label, other.input, other.output))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'SlotSpec(%r, %i, %i)' % (self.label, self.input_dim,
                                         self.output_dim)


class _Structured(object):

    """Past, slot and future metadata shared by every kind of process."""

    def __init__(self, past, slots, future):
        self.past = [(str(l), int(d)) for (l, d) in past]
        self.slots = sorted(slots, key=lambda s: s.label)
        self.future = [(str(l), int(d)) for (l, d) in future]
        if len(set(s.label for s in self.slots)) != len(self.slots):
            raise ValueError('Duplicate slot labels.')

        systems = list(self.past)
        for slot in self.slots:
            systems += [slot.input, slot.output]
        systems += self.future
        self.layout = SystemLayout(systems)

    @property
    def past_layout(self):
        """SystemLayout of the global past."""
        return SystemLayout(self.past)

    @property
    def future_layout(self):
        """SystemLayout of the global future."""
        return SystemLayout(self.future)

    @property
    def past_dim(self):
        """Dimension of the global past."""
        return self.past_layout.dim

    @property
    def future_dim(self):
        """Dimension of the global future."""
        return self.future_layout.dim

    def same_structure(self, other):
        """Return True if other has identical past, slots and future."""
        return (self.past == other.past and self.slots == other.slots and
                self.future == other.future)

    def _check_channels(self, channels):
        """Check one channel per slot with matching dims."""
        if len(channels) != len(self.slots):
            raise ValueError('Process has %i slots but %i channels were '
                             'given.' % (len(self.slots), len(channels)))
        for (slot, ch) in zip(self.slots, channels):
            if (ch.din, ch.dout) != (slot.input_dim, slot.output_dim):
                raise ValueError('Channel %i → %i does not fit slot ‘%s’ '
                                 '(%i → %i).' %
                                 (ch.din, ch.dout, slot.label,
                                  slot.input_dim, slot.output_dim))


class Process(_Structured):

    """Common base of ProcessMatrix and ProcessVector."""

    def output_channel(self, channels):
        """Return the output ChoiOperator; see apply_process()."""
        return apply_process(self, channels)

    def output_map(self, channels):
        """Return a function mapping past operators to future operators."""
        return self.output_channel(channels).apply_operator


class ProcessMatrix(Process):

    """A process given by its (dense) process matrix."""

    def __init__(self, matrix, past, slots, future):
        """
        Construct a new ProcessMatrix.

        Args:
            matrix: square matrix in canonical system order
            past: list of `(label, dim)` past systems
            slots: list of SlotSpec
            future: list of `(label, dim)` future systems
        """
        super(ProcessMatrix, self).__init__(past, slots, future)
        matrix = tensor.as_matrix(matrix)
        if matrix.shape != (self.layout.dim, self.layout.dim):
            raise ValueError('Process matrix of shape %s does not match '
                             'layout of dimension %i.' %
                             (matrix.shape, self.layout.dim))
        self.matrix = matrix

    def to_matrix(self):
        """Return self."""
        return self


class ProcessVector(Process):

    """A pure process given by its process vector `|w⟩`."""

    def __init__(self, vector, past, slots, future):
        """
        Construct a new ProcessVector.

        Args:
            vector: 1-D array in canonical system order
            past: list of `(label, dim)` past systems
            slots: list of SlotSpec
            future: list of `(label, dim)` future systems
        """
        super(ProcessVector, self).__init__(past, slots, future)
        vector = np.asarray(vector, dtype=np.complex128).reshape(-1)
        if vector.shape[0] != self.layout.dim:
            raise ValueError('Process vector of length %i does not match '
                             'layout of dimension %i.' %
                             (vector.shape[0], self.layout.dim))
        if not np.all(np.isfinite(vector)):
            raise ValueError('Process vector has non-finite entries.')
        self.vector = vector

    def to_matrix(self):
        """Return the rank-1 ProcessMatrix `|w⟩⟨w|`."""
        return ProcessMatrix(tensor.projector(self.vector), self.past,
                             self.slots, self.future)


def _identity_wire(dim):
    """Return `|𝟙⟩⟩ = Σ_i |i⟩|i⟩`."""
    return np.eye(dim, dtype=np.complex128).reshape(-1)


def _chain(order, dim, past_label, future_label):
    """
    Build the identity wiring past → order[0] → … → order[-1] → future.

    Returns:
        `(vector, layout)` in native order: past, then each slot's input and
        output in application order, then future.
    """
    systems = [(past_label, dim)]
    for label in order:
        systems += [('%s_I' % label, dim), ('%s_O' % label, dim)]
    systems.append((future_label, dim))
    vector = reduce(np.kron, [_identity_wire(dim)] * (len(order) + 1))
    return vector, SystemLayout(systems)


def _parse_order(order):
    """Accept 'AB', 'A->B', 'A→B' or a sequence of labels."""
    if isinstance(order, str):
        return [c for c in order if c.isalpha()]
    return list(order)


def w_compose(order='AB', dim=2):
    """
    Return the process vector of a sequential composition of channels.

    For order 'AB' this is `|A→B⟩ = |𝟙⟩⟩⊗|𝟙⟩⟩⊗|𝟙⟩⟩` on P A_I A_O B_I B_O F,
    so that the slots (A, B) map to B∘A. Any ordering of any number of slot
    labels is accepted; 'ABC' with slots (A, B, C) gives C∘B∘A.
    """
    order = _parse_order(order)
    if len(order) < 1 or len(set(order)) != len(order):
        raise ValueError('Invalid composition order ‘%s’.' % ''.join(order))
    vector, native = _chain(order, dim, 'P', 'F')
    result = ProcessVector(np.zeros(native.dim), [('P', dim)],
                           [SlotSpec(label, dim, dim) for label in order],
                           [('F', dim)])
    result.vector = tensor.permute_vector(vector, native,
                                          result.layout.labels)
    return result


def mixture(q, wa, wb):
    """Return the convex combination `q·Wa + (1 − q)·Wb`."""
    if not 0.0 <= q <= 1.0:
        raise ValueError('Mixture weight must lie in [0, 1], got %r.' % q)
    if not wa.same_structure(wb):
        raise ValueError('Cannot mix processes with different structure.')
    wa = wa.to_matrix()
    wb = wb.to_matrix()
    return ProcessMatrix(q * wa.matrix + (1 - q) * wb.matrix,
                         wa.past, wa.slots, wa.future)


def _controlled_orders(orders, prefactor=1.0):
    """Sum the chains for each order, tagged by control |k⟩|k⟩."""
    slots = [SlotSpec(label, 2, 2) for label in orders[0]]
    result = ProcessVector(np.zeros(2 ** (2 * len(slots) + 4)),
                           [('S_I', 2), ('Q_I', 2)], slots,
                           [('S_O', 2), ('Q_O', 2)])
    total = np.zeros(result.layout.dim, dtype=np.complex128)
    for (k, order) in enumerate(orders):
        vector, native = _chain(order, 2, 'S_I', 'S_O')
        control = tensor.ket(k, 2)
        vector = reduce(np.kron, [vector, control, control])
        native = native.concat(SystemLayout([('Q_I', 2), ('Q_O', 2)]))
        total += tensor.permute_vector(vector, native, result.layout.labels)
    result.vector = prefactor * total
    return result


def w_switch2():
    """
    Return the bipartite quantum switch `|w₀⟩ + |w₁⟩`.

    `|w₀⟩ = |A→B⟩|0,0⟩` on S_I A_I A_O B_I B_O S_O Q_I Q_O and
    `|w₁⟩ = |B→A⟩|1,1⟩` on S_I B_I B_O A_I A_O S_O Q_I Q_O. The past is
    S_I Q_I and the future S_O Q_O.
    """
    return _controlled_orders(['AB', 'BA'])


def w_switch3(literal_prefactor=False):
    """
    Return the tripartite switch between the orders A→B→C and C→B→A.

    The vector is left unnormalized, like the bipartite switch, so that its
    output channels are trace preserving. `literal_prefactor=True` applies
    an overall 1/√2, whose output channels then have half the trace.
    """
    prefactor = 1 / np.sqrt(2) if literal_prefactor else 1.0
    return _controlled_orders(['ABC', 'CBA'], prefactor)


# Native system order of the Lugano process vector.
_LUGANO_NATIVE = ['A_I', 'B_I', 'C_I', 'P1', 'P2', 'P3',
                  'F1', 'F2', 'F3', 'A_O', 'B_O', 'C_O']


def w_lugano():
    """
    Return the Lugano process vector on 12 qubits.

    It is the sum over bits (i, j, k, r, s, t) of unit-amplitude basis kets
    with A_I = r ⊕ (¬j ∧ k), B_I = s ⊕ (¬k ∧ i), C_I = t ⊕ (¬i ∧ j),
    P = (r, s, t), F = (i, j, k) and A_O B_O C_O = (i, j, k).
    """
    native = SystemLayout([(label, 2) for label in _LUGANO_NATIVE])
    vector = np.zeros(native.dim, dtype=np.complex128)
    for (i, j, k, r, s, t) in itertools.product((0, 1), repeat=6):
        bits = [r ^ ((1 - j) & k), s ^ ((1 - k) & i), t ^ ((1 - i) & j),
                r, s, t, i, j, k, i, j, k]
        vector[int(''.join(str(b) for b in bits), 2)] = 1.0

    result = ProcessVector(np.zeros(native.dim),
                           [('P1', 2), ('P2', 2), ('P3', 2)],
                           [SlotSpec(label, 2, 2) for label in 'ABC'],
                           [('F1', 2), ('F2', 2), ('F3', 2)])
    result.vector = tensor.permute_vector(vector, native,
                                          result.layout.labels)
    return result


def w_replacement(sigma, dim=2):
    """
    Return the causally ordered process mapping any (A, B) to `Tr[·] σ`.

    The past system runs through A then B and is discarded, while the
    future is prepared in σ.
    """
    if not isinstance(sigma, DensityState):
        sigma = DensityState(sigma)
    if sigma.dim != dim:
        raise ValueError('Replacement state has dimension %i, expected %i.'
                         % (sigma.dim, dim))
    wire = tensor.projector(_identity_wire(dim))
    matrix = tensor.kron_all([wire, wire, np.eye(dim), sigma.matrix])
    return ProcessMatrix(matrix, [('P', dim)],
                         [SlotSpec('A', dim, dim), SlotSpec('B', dim, dim)],
                         [('F', dim)])


def _as_choi(ch):
    if isinstance(ch, KrausChannel):
        return kraus_to_choi(ch)
    return ch


def apply_process(w, channels):
    """
    Plug one channel per slot into a process and return the output channel.

    Args:
        w: ProcessMatrix or ProcessVector
        channels: list of ChoiOperator (or KrausChannel), in slot label order

    Returns:
        ChoiOperator from the global past (input) to the global future
        (output).
    """
    chois = [_as_choi(ch) for ch in channels]
    w._check_channels(chois)
    d_past = w.past_dim
    d_future = w.future_dim
    n = len(chois)

    if isinstance(w, ProcessVector):
        shape = [d_past] + [slot.dim for slot in w.slots] + [d_future]
        ket = w.vector.reshape(shape)
        partial = ket
        for (k, j) in enumerate(chois):
            partial = np.tensordot(partial, j.matrix, axes=([1 + k], [0]))
            partial = np.moveaxis(partial, -1, 1 + k)
        slot_axes = list(range(1, n + 1))
        out = np.tensordot(partial, ket.conj(), axes=(slot_axes, slot_axes))
    else:
        slot_labels = [label for slot in w.slots
                       for label in (slot.input[0], slot.output[0])]
        transposed = tensor.partial_transpose(w.matrix, w.layout, slot_labels)
        d_slots = reduce(lambda a, b: a * b, [s.dim for s in w.slots], 1)
        joint = tensor.kron_all([j.matrix for j in chois]) if chois else \
            np.ones((1, 1), dtype=np.complex128)
        transposed = transposed.reshape(d_past, d_slots, d_future,
                                        d_past, d_slots, d_future)
        out = np.einsum('psfqtg,ts->pfqg', transposed, joint)

    return ChoiOperator(out.reshape(d_past * d_future, d_past * d_future),
                        d_past, d_future, 'P', 'F')


class CombRecipe(_Structured):

    """
    A causally ordered process given as a sequence of steps.

    Each step is either a fixed KrausChannel acting on target ⊗ environment
    or a slot label; a slot's channel acts on the target with the identity
    on the environment. The global past is S_I (⊗ Q_I) and the global future
    S_O (⊗ Q_O); the environment factor is omitted when it is trivial, which
    gives a Markov process.
    """

    def __init__(self, steps, target_dim=2, env_dim=1):
        """
        Construct a new CombRecipe.

        Args:
            steps: sequence of KrausChannel instances and slot labels, in
                application order
            target_dim: int, dimension of the target system and every slot
            env_dim: int, dimension of the environment threading the steps
        """
        self.steps = list(steps)
        self.target_dim = target_dim
        self.env_dim = env_dim
        width = target_dim * env_dim

        slot_order = []
        for step in self.steps:
            if isinstance(step, KrausChannel):
                if (step.din, step.dout) != (width, width):
                    raise ValueError('Fixed channel %i → %i does not act on '
                                     'target ⊗ environment (%i).' %
                                     (step.din, step.dout, width))
            elif step in slot_order:
                raise ValueError('Slot ‘%s’ appears twice.' % step)
            else:
                slot_order.append(step)
        self.slot_order = slot_order

        past = [('S_I', target_dim)]
        future = [('S_O', target_dim)]
        if env_dim > 1:
            past.append(('Q_I', env_dim))
            future.append(('Q_O', env_dim))
        super(CombRecipe, self).__init__(
            past, [SlotSpec(label, target_dim, target_dim)
                   for label in slot_order], future)

    def _slot_kraus(self, channels):
        """Map slot label → Kraus operators extended by 𝟙 on the
        environment."""
        channels = [choi_to_kraus(ch) if isinstance(ch, ChoiOperator) else ch
                    for ch in channels]
        self._check_channels(channels)
        identity = np.eye(self.env_dim)
        return dict((slot.label, [np.kron(k, identity) for k in ch.kraus])
                    for (slot, ch) in zip(self.slots, channels))

    def evolve(self, channels, x):
        """Run an operator on target ⊗ environment through the steps."""
        return self.output_map(channels)(x)

    def output_map(self, channels):
        """Return a function mapping past operators to future operators."""
        kraus = self._slot_kraus(channels)

        def _evolve(x):
            for step in self.steps:
                if isinstance(step, KrausChannel):
                    x = step.apply_operator(x)
                else:
                    x = sum(k @ x @ k.conj().T for k in kraus[step])
            return x

        return _evolve

    def to_matrix(self):
        """Return the equivalent ProcessMatrix; see comb_to_process_matrix()."""
        return comb_to_process_matrix(self)


def comb_ising2():
    """Return U ∘ (B ⊗ 𝟙) ∘ U ∘ (A ⊗ 𝟙) ∘ U with U = exp(−i H_Ising)."""
    u = unitary_channel(ising_unitary())
    return CombRecipe([u, 'A', u, 'B', u], target_dim=2, env_dim=2)


def comb_ising3():
    """Return the three-slot analogue of comb_ising2() with four U steps."""
    u = unitary_channel(ising_unitary())
    return CombRecipe([u, 'A', u, 'B', u, 'C', u], target_dim=2, env_dim=2)


def apply_comb(c, channels, state):
    """
    Run a DensityState through a comb with the given slot channels.

    Args:
        c: CombRecipe
        channels: list of KrausChannel, in slot label order
        state: DensityState on the global past

    Returns:
        DensityState on the global future.
    """
    if state.dim != c.past_dim:
        raise ValueError('State dimension %i does not match comb past '
                         'dimension %i.' % (state.dim, c.past_dim))
    return DensityState(c.evolve(channels, state.matrix), c.future_layout)


def _superoperator(kraus_channel):
    """Row-major superoperator Σ K ⊗ K̄ of a Kraus channel."""
    return sum(np.kron(k, k.conj()) for k in kraus_channel.kraus)


def _slot_basis_superoperators(target_dim, env_dim):
    """
    Superoperators of the maps whose Choi operators are |a⟩⟨b|, extended by
    the identity on the environment.

    Returns an array of shape (D², M, M) indexed by a·D + b, where D is the
    slot Choi dimension and M the superoperator dimension.
    """
    d = np.eye(target_dim)
    e = np.eye(env_dim)
    basis = np.einsum('ia,ob,jc,pd,xy,zw->iojpbxdzaycw', d, d, d, d, e, e)
    big_d = target_dim ** 2
    width = (target_dim * env_dim) ** 2
    return basis.reshape(big_d * big_d, width, width).astype(np.complex128)


def comb_to_process_matrix(c):
    """
    Return the ProcessMatrix of a CombRecipe.

    Every slot is fed each element |a⟩⟨b| of an operator basis of its Choi
    space; the output Choi operator for the basis tuple is the corresponding
    block of the process matrix.
    """
    width = (c.target_dim * c.env_dim) ** 2
    basis = _slot_basis_superoperators(c.target_dim, c.env_dim)

    # Leading axes index the basis element fed to each slot, in application
    # order; the last two are the superoperator of the whole sequence.
    chain = np.eye(width, dtype=np.complex128)
    for step in c.steps:
        if isinstance(step, KrausChannel):
            chain = np.matmul(_superoperator(step), chain)
        else:
            chain = np.einsum('kxy,...yz->...kxz', basis, chain)

    n = len(c.slot_order)
    d_slot = c.target_dim ** 2
    d_io = c.target_dim * c.env_dim
    label_order = [c.slot_order.index(slot.label) for slot in c.slots]
    chain = chain.transpose(label_order + [n, n + 1])
    chain = chain.reshape([d_slot, d_slot] * n + [d_io] * 4)

    # Axes are now a_1 b_1 … a_n b_n f f' p p'.
    rows = list(range(0, 2 * n, 2))
    cols = list(range(1, 2 * n, 2))
    f, f2, p, p2 = 2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3
    matrix = chain.transpose([p] + rows + [f, p2] + cols + [f2])
    return ProcessMatrix(matrix.reshape(c.layout.dim, c.layout.dim),
                         c.past, c.slots, c.future)


class ValidationReport(object):

    """Outcome of validate_sampled()."""

    def __init__(self, samples, seed):
        self.samples = samples
        self.seed = seed
        self.min_eigenvalue = 0.0
        self.worst_output_error = 0.0
        self.log = ValidityLog()

    @property
    def passed(self):
        """True if no validity issue was logged."""
        return not self.log.has_issues()

    def key_values(self):
        """Return the report as an ordered list of `(key, value)` pairs."""
        return [
            ('passed', 'true' if self.passed else 'false'),
            ('samples', str(self.samples)),
            ('seed', str(self.seed)),
            ('min_eigenvalue', '%.12g' % self.min_eigenvalue),
            ('failed_samples', str(self.log.codes().count('not-cptp-output'))),
        ]


def validate_sampled(w, n=20, seed=0):
    """
    Check a process operationally.

    The process matrix must be positive semi-definite, and the output of n
    random CPTP slot tuples must pass is_cptp(). Random channels are drawn
    by Haar-random dilation with a qubit environment from a generator seeded
    with `seed`, so the report is deterministic.

    Args:
        w: ProcessMatrix, ProcessVector or CombRecipe
        n: int, number of random channel tuples, at least 1
        seed: int, generator seed

    Returns:
        A ValidationReport.
    """
    if n < 1:
        raise ValueError('At least one sample is needed, got %i.' % n)
    if isinstance(w, CombRecipe):
        w = comb_to_process_matrix(w)

    report = ValidationReport(n, seed)
    if isinstance(w, ProcessMatrix):
        values = np.linalg.eigvalsh((w.matrix + w.matrix.conj().T) / 2)
        report.min_eigenvalue = values[0]
        if values[0] < -PSD_TOLERANCE * max(1.0, abs(values[-1])):
            report.log.log_issue('not-psd',
                                 'Process matrix has negative eigenvalue '
                                 '%.3g.' % values[0])

    rng = np.random.default_rng(seed)
    for sample in range(n):
        channels = [random_channel(slot.input_dim, slot.output_dim, rng)
                    for slot in w.slots]
        output = apply_process(w, channels)
        passed, diagnostic = is_cptp(output)
        if not passed:
            report.log.log_issue('not-cptp-output',
                                 'Sample %i: %s' % (sample, diagnostic))

    return report


class Wiring(object):

    """
    How a target, a measured ancilla and auxiliary inputs attach to the
    global past and future of a process.

    A wiring without ancilla systems lets the ancilla bypass the process
    untouched. Future systems listed in `discard` are traced out.
    """

    def __init__(self, target_in, target_out, ancilla_in=None,
                 ancilla_out=None, auxiliary=None, discard=()):
        """
        Construct a new Wiring.

        Args:
            target_in: str, past system receiving the target state
            target_out: str, future system holding the target output
            ancilla_in: str or None, past system receiving the ancilla
            ancilla_out: str or None, future system that is measured
            auxiliary: dict mapping past system labels to pure state vectors
            discard: sequence of future system labels to trace out
        """
        if (ancilla_in is None) != (ancilla_out is None):
            raise ValueError('Ancilla must be wired both in and out, or not '
                             'at all.')
        self.target_in = target_in
        self.target_out = target_out
        self.ancilla_in = ancilla_in
        self.ancilla_out = ancilla_out
        self.auxiliary = dict(auxiliary or {})
        self.discard = list(discard)

    @property
    def bypass(self):
        """True if the ancilla does not enter the process."""
        return self.ancilla_in is None

    @classmethod
    def for_process(cls, process):
        """Return the default wiring of a process with S/Q or P/F systems."""
        past = [label for (label, _) in process.past]
        future = [label for (label, _) in process.future]
        if past == ['S_I', 'Q_I'] and future == ['S_O', 'Q_O']:
            return cls('S_I', 'S_O', 'Q_I', 'Q_O')
        if past == ['P1', 'P2', 'P3'] and future == ['F1', 'F2', 'F3']:
            return lugano_wiring()
        if len(past) == 1 and len(future) == 1:
            return cls(past[0], future[0])
        raise ValueError('No default wiring for past ‘%s’ and future ‘%s’.' %
                         (' '.join(past), ' '.join(future)))

    def check(self, process):
        """Raise ValueError if the wiring does not fit the process."""
        past = dict(process.past)
        future = dict(process.future)
        used_in = [self.target_in] + list(self.auxiliary)
        used_out = [self.target_out] + self.discard
        if not self.bypass:
            used_in.append(self.ancilla_in)
            used_out.append(self.ancilla_out)
        if sorted(used_in) != sorted(past):
            raise ValueError('Wiring inputs ‘%s’ do not cover the past ‘%s’.'
                             % (' '.join(used_in), ' '.join(past)))
        if sorted(used_out) != sorted(future):
            raise ValueError('Wiring outputs ‘%s’ do not cover the future '
                             '‘%s’.' % (' '.join(used_out), ' '.join(future)))
        for (label, state) in self.auxiliary.items():
            if len(state) != past[label]:
                raise ValueError('Auxiliary state for ‘%s’ has dimension %i, '
                                 'expected %i.' %
                                 (label, len(state), past[label]))


def lugano_wiring(auxiliary_state=None):
    """
    Return the wiring of the Lugano process as a bipartite superchannel.

    P1 takes the target and F1 holds its output; P2 takes the ancilla and F2
    is measured; P3 is fed `auxiliary_state` (default |0⟩) and F3 is traced
    out.
    """
    if auxiliary_state is None:
        auxiliary_state = tensor.ket(0, 2)
    return Wiring('P1', 'F1', 'P2', 'F2',
                  {'P3': np.asarray(auxiliary_state, dtype=np.complex128)},
                  discard=['F3'])
