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
Dense complex linear algebra over labelled tensor-product spaces.

Operators are plain `numpy.ndarray` instances of dtype complex128. The factor
structure of an operator is described separately by a `SystemLayout`, an
ordered list of `(label, dim)` pairs; every function taking a layout expects
the operator dimension to equal the product of the layout dimensions.

All functions are pure: they never modify their arguments.
"""


from functools import reduce
import operator

import numpy as np
import scipy.linalg
from scipy.stats import unitary_group


# Relative Frobenius tolerance for Hermiticity checks.
HERMITIAN_TOLERANCE = 1e-9

# Eigenvalues in [-PSD_CLIP, 0) are treated as zero in PSD contexts.
PSD_CLIP = 1e-10


class SystemLayout(object):

    """
    Ordered list of labelled subsystems making up a tensor-product space.

    For example, the layout of a bipartite switch process vector in canonical
    order is `SystemLayout([('S_I', 2), ('Q_I', 2), ('A_I', 2), ...])`.
    """

    def __init__(self, systems):
        """
        Construct a new SystemLayout.

        Args:
            systems: iterable of `(label, dim)` pairs; labels must be unique
                and dims at least 1
        """
        self.systems = tuple((str(label), int(dim)) for (label, dim) in systems)

        seen = set()
        for (label, dim) in self.systems:
            if label in seen:
                raise ValueError('Duplicate system label ‘%s’.' % label)
            if dim < 1:
                raise ValueError('System ‘%s’ has invalid dimension %i.' %
                                 (label, dim))
            seen.add(label)

    @property
    def labels(self):
        """Tuple of system labels, in factor order."""
        return tuple(label for (label, _) in self.systems)

    @property
    def dims(self):
        """Tuple of system dimensions, in factor order."""
        return tuple(dim for (_, dim) in self.systems)

    @property
    def dim(self):
        """Dimension of the full tensor-product space."""
        return reduce(operator.mul, self.dims, 1)

    def index(self, label):
        """Return the factor position of `label`."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError('Unknown system label ‘%s’.' % label)

    def dim_of(self, label):
        """Return the dimension of the system called `label`."""
        return self.systems[self.index(label)][1]

    def concat(self, other):
        """Return the layout of `self ⊗ other`."""
        return SystemLayout(self.systems + other.systems)

    def permuted(self, perm):
        """Return the layout with its systems reordered to `perm`."""
        return SystemLayout([self.systems[i]
                             for i in _permutation_indices(self, perm)])

    def without(self, labels):
        """Return the layout with the given systems removed."""
        labels = _check_labels(self, labels)
        return SystemLayout([s for s in self.systems if s[0] not in labels])

    def __len__(self):
        return len(self.systems)

    def __iter__(self):
        return iter(self.systems)

    def __eq__(self, other):
        return (isinstance(other, SystemLayout) and
                self.systems == other.systems)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.systems)

    def __repr__(self):
        return 'SystemLayout(%r)' % (list(self.systems),)


def _check_labels(layout, labels):
    """Check every label exists in layout; return them as a set."""
    labels = set(labels)
    for label in labels:
        layout.index(label)
    return labels


def _permutation_indices(layout, perm):
    """Convert a label permutation to a list of factor positions."""
    perm = list(perm)
    indices = [layout.index(label) for label in perm]
    if len(indices) != len(layout) or len(set(indices)) != len(indices):
        raise ValueError('Permutation ‘%s’ is not a bijection on ‘%s’.' %
                         (', '.join(perm), ', '.join(layout.labels)))
    return indices


def as_matrix(m):
    """
    Convert `m` to a complex128 2-D array and check its invariants.

    Raises ValueError if `m` is not two-dimensional, is empty or contains
    non-finite entries.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError('Expected a non-empty matrix, got shape %s.' %
                         (m.shape,))
    if not np.all(np.isfinite(m)):
        raise ValueError('Matrix has non-finite entries.')
    return m


def _check_square(m, layout):
    m = as_matrix(m)
    if m.shape != (layout.dim, layout.dim):
        raise ValueError('Matrix of shape %s does not match layout of '
                         'dimension %i.' % (m.shape, layout.dim))
    return m


def kron(a, b):
    """Return the tensor product `a ⊗ b`; layouts are concatenated by the
    caller."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(operators):
    """Return the tensor product of a non-empty sequence of operators."""
    return reduce(kron, operators)


def ket(index, dim):
    """Return the computational basis column vector `|index⟩` of size dim."""
    out = np.zeros(dim, dtype=np.complex128)
    out[index] = 1.0
    return out


def projector(vector):
    """Return `|v⟩⟨v|` for a 1-D vector."""
    vector = np.asarray(vector, dtype=np.complex128).reshape(-1)
    return np.outer(vector, vector.conj())


def permute_systems(m, layout, perm):
    """
    Reorder the tensor factors of an operator.

    Args:
        m: square matrix annotated by `layout`
        layout: SystemLayout of `m`
        perm: sequence of all labels of `layout` in the new order

    Returns:
        The same operator expressed with its factors ordered as `perm`.
    """
    m = _check_square(m, layout)
    indices = _permutation_indices(layout, perm)
    n = len(layout)
    tensor = m.reshape(layout.dims * 2)
    tensor = tensor.transpose(indices + [n + i for i in indices])
    return tensor.reshape(layout.dim, layout.dim)


def permute_vector(v, layout, perm):
    """Reorder the tensor factors of a ket; see permute_systems()."""
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    if v.shape[0] != layout.dim:
        raise ValueError('Vector of length %i does not match layout of '
                         'dimension %i.' % (v.shape[0], layout.dim))
    indices = _permutation_indices(layout, perm)
    return v.reshape(layout.dims).transpose(indices).reshape(-1)


def partial_trace(m, layout, discard):
    """
    Trace out the systems labelled in `discard`.

    The kept systems retain their relative order. Discarding every system
    returns a 1×1 matrix holding the trace.
    """
    m = _check_square(m, layout)
    discard = _check_labels(layout, discard)
    if not discard:
        return m.copy()

    n = len(layout)
    rows = list(range(n))
    cols = list(range(n, 2 * n))
    keep = []
    for (i, label) in enumerate(layout.labels):
        if label in discard:
            cols[i] = rows[i]
        else:
            keep.append(i)

    out = np.einsum(m.reshape(layout.dims * 2), rows + cols,
                    [rows[i] for i in keep] + [cols[i] for i in keep])
    kept_dim = reduce(operator.mul, [layout.dims[i] for i in keep], 1)
    return out.reshape(kept_dim, kept_dim)


def partial_transpose(m, layout, subset):
    """Transpose the factors labelled in `subset`, leaving the rest alone."""
    m = _check_square(m, layout)
    subset = _check_labels(layout, subset)
    n = len(layout)
    axes = list(range(2 * n))
    for label in subset:
        i = layout.index(label)
        axes[i], axes[n + i] = axes[n + i], axes[i]
    tensor = m.reshape(layout.dims * 2).transpose(axes)
    return tensor.reshape(layout.dim, layout.dim)


def hermiticity_error(m):
    """Return ‖m − m†‖_F relative to max(‖m‖_F, 1)."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        return np.inf
    return (np.linalg.norm(m - m.conj().T) /
            max(np.linalg.norm(m), 1.0))


def is_hermitian(m, tolerance=HERMITIAN_TOLERANCE):
    """Return True if `m` is Hermitian within the relative tolerance."""
    return hermiticity_error(m) <= tolerance


def herm_eig(m):
    """
    Diagonalize a Hermitian operator.

    Returns:
        `(eigenvalues, eigenvectors)`: eigenvalues as a real array sorted in
        descending order (ties keep a stable order), eigenvectors as the
        matching orthonormal columns of a unitary matrix.

    Raises:
        ValueError: if `m` is not Hermitian within HERMITIAN_TOLERANCE.
    """
    m = as_matrix(m)
    if not is_hermitian(m):
        raise ValueError('Operator is not Hermitian (relative error %.3g).' %
                         hermiticity_error(m))
    values, vectors = scipy.linalg.eigh((m + m.conj().T) / 2)
    order = np.argsort(-values, kind='stable')
    return values[order], vectors[:, order]


def clip_eigenvalues(values):
    """Set eigenvalues in [-PSD_CLIP, 0) to exactly zero."""
    values = np.array(values, dtype=float)
    values[(values < 0) & (values >= -PSD_CLIP)] = 0.0
    return values


def exp_hermitian(h, scale):
    """
    Return `exp(scale·h)` for Hermitian `h` through its spectrum.

    With `scale = -1j` this is the unitary generated by the Hamiltonian `h`
    over unit time (ħ = 1).
    """
    values, vectors = herm_eig(h)
    return (vectors * np.exp(scale * values)) @ vectors.conj().T


def random_unitary(dim, rng):
    """Draw a Haar-random unitary of size dim from a numpy Generator."""
    if dim == 1:
        return np.exp(2j * np.pi * rng.random()).reshape(1, 1)
    return np.asarray(unitary_group.rvs(dim, random_state=rng),
                      dtype=np.complex128)
