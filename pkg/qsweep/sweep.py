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
Free-energy and ergotropy sweeps over the process zoo.

Every grid point is an independent job `(process, r)`. Jobs may run in a
process pool; rows are sorted by the position of the process in the
configuration and of r in the grid, so the CSV output does not depend on
scheduling.
"""


from concurrent.futures import ProcessPoolExecutor
import csv
import math

import numpy as np

from qprocess.channels import (DensityState, IDENTITY, PAULI_X, PAULI_Y,
                               PAULI_Z, gad, phase_flip)
from qprocess.processes import (Wiring, comb_ising2, comb_ising3,
                                lugano_wiring, mixture, w_compose, w_lugano,
                                w_replacement, w_switch2, w_switch3)
from qprocess.thermo import (FreeEnergy, Hamiltonian, ancilla_state,
                             average_figure, beta_from_gad,
                             measurement_basis, run_protocol)
from qsweep.optimizer import (OptConfig, ParamVector, ProtocolObjective,
                              maximize_function)


CSV_HEADER = ['process', 'r', 'delta_rho', 'figure', 'value', 'prob_0',
              'prob_1', 'm', 'phi', 'x', 'chi']


def _format_number(value):
    if value is None:
        return ''
    return '%.12g' % value


def replacement_state(bloch):
    """Return the qubit state (𝟙 + x σx + y σy + z σz)/2."""
    x, y, z = bloch
    return DensityState((IDENTITY + x * PAULI_X + y * PAULI_Y +
                         z * PAULI_Z) / 2)


def build_process(name, cfg):
    """
    Build a process of the zoo with its slot channels and wiring.

    Two-slot processes get the channels (R, T) and three-slot processes
    (R, R, T), in slot label order, where R is the generalized amplitude
    damping channel R_{p,λ} and T the phase flip channel T_q.

    Args:
        name: str, one of sweepconfig.PROCESS_NAMES
        cfg: SweepConfig

    Returns:
        `(process, channels, wiring)`.
    """
    gad_channel = gad(cfg['p'], cfg['lambda'])
    flip = phase_flip(cfg['q'])
    two = [gad_channel, flip]
    three = [gad_channel, gad_channel, flip]

    if name == 'composition':
        process, channels = w_compose('AB'), two
    elif name == 'composition3':
        process, channels = w_compose(cfg['composition3-order']), three
    elif name == 'mixture':
        process = mixture(cfg['mixture-weight'], w_compose('AB'),
                          w_compose('BA'))
        channels = two
    elif name == 'switch2':
        process, channels = w_switch2(), two
    elif name == 'switch3':
        process, channels = w_switch3(), three
    elif name == 'ising2':
        process, channels = comb_ising2(), two
    elif name == 'ising3':
        process, channels = comb_ising3(), three
    elif name == 'lugano':
        if cfg['lugano-auxiliary'] == 'plus':
            auxiliary = np.array([1.0, 1.0]) / math.sqrt(2)
        else:
            auxiliary = np.array([1.0, 0.0])
        return w_lugano(), three, lugano_wiring(auxiliary)
    elif name == 'replacement':
        process = w_replacement(replacement_state(cfg['replacement-state']))
        channels = two
    else:
        raise ValueError('Unknown process ‘%s’.' % name)

    return process, channels, Wiring.for_process(process)


def target_state(cfg, r):
    """Return the diagonal or pure target state for population r."""
    if cfg['target'] == 'pure':
        return DensityState.from_vector([math.sqrt(r), math.sqrt(1 - r)])
    return DensityState.diagonal([r, 1 - r])


def fixed_params(cfg):
    """Return the protocol parameters given in the configuration."""
    return ParamVector(cfg['measurement-m'], cfg['measurement-phi'],
                       cfg['ancilla-x'], cfg['ancilla-chi'])


def opt_config(cfg):
    """Return the optimizer settings given in the configuration."""
    return OptConfig(cfg['restarts'], cfg['seed'], cfg['tolerance'],
                     cfg['max-iterations'])


class SweepRow(object):

    """One CSV row: the figure of merit of one process at one r."""

    def __init__(self, process, r, figure, value, probabilities, params=None):
        """
        Construct a new SweepRow.

        Args:
            process: str, process name
            r: float, ground population of the target input
            figure: str, 'free-energy' or 'ergotropy'
            value: float, averaged figure of merit
            probabilities: list of branch probabilities
            params: optimal ParamVector, or None if not optimized
        """
        if not math.isfinite(value):
            raise ValueError('Non-finite value for ‘%s’ at r = %r.' %
                             (process, r))
        self.process = process
        self.r = r
        self.figure = figure
        self.value = value
        self.probabilities = list(probabilities)
        self.params = params

    @property
    def delta_rho(self):
        """Population imbalance ⟨1|ρ|1⟩ − ⟨0|ρ|0⟩ = 1 − 2r."""
        return 1 - 2 * self.r

    def fields(self):
        """Return the CSV fields of the row."""
        probabilities = self.probabilities + [None] * 2
        params = self.params
        return [self.process, _format_number(self.r),
                _format_number(self.delta_rho), self.figure,
                _format_number(self.value),
                _format_number(probabilities[0]),
                _format_number(probabilities[1]),
                _format_number(params.m if params else None),
                _format_number(params.phi if params else None),
                _format_number(params.x if params else None),
                _format_number(params.chi if params else None)]


def evaluate_point(cfg, name, r):
    """
    Evaluate the configured figure of merit for one process at one r.

    Free energy is averaged over the fixed protocol at β from the
    configuration, or β = log₂(p/(1 − p)) if none is given. Ergotropy is the
    daemonic ergotropy, maximized over the protocol parameters when the
    measurement is set to 'optimize'.

    Returns:
        A SweepRow.
    """
    process, channels, wiring = build_process(name, cfg)
    target = target_state(cfg, r)
    h = Hamiltonian.qubit()

    if cfg.experiment == 'free-energy':
        beta = cfg['beta']
        if beta is None:
            beta = beta_from_gad(cfg['p'])
        params = fixed_params(cfg)
        branches = run_protocol(process, channels, target,
                                ancilla_state(params.x, params.chi),
                                measurement_basis(params.m, params.phi),
                                wiring)
        value = average_figure(branches, FreeEnergy(beta), h)
        return SweepRow(name, r, 'free-energy', value,
                        [b.probability for b in branches])

    objective = ProtocolObjective(process, channels, target, wiring, h)
    if cfg['measurement'] == 'optimize':
        result = maximize_function(objective, opt_config(cfg))
        params, value, reported = result.params, result.value, result.params
    else:
        params = fixed_params(cfg)
        value, reported = objective(params), None
    branches = objective.branches(params)
    return SweepRow(name, r, 'ergotropy', value,
                    [b.probability for b in branches], reported)


def _evaluate_job(job):
    cfg, name, r = job
    return evaluate_point(cfg, name, r)


def run_sweep(cfg, jobs=1):
    """
    Evaluate every (process, r) point of a configuration.

    Args:
        cfg: SweepConfig
        jobs: int, number of worker processes; 1 runs in this process

    Returns:
        list of SweepRow, sorted by process position then r.
    """
    if jobs < 1:
        raise ValueError('Job count must be at least 1, got %i.' % jobs)
    grid = cfg.r_grid()
    keys = [(i, j) for i in range(len(cfg['processes']))
            for j in range(len(grid))]
    work = [(cfg, cfg['processes'][i], float(grid[j])) for (i, j) in keys]

    if jobs == 1:
        rows = [_evaluate_job(job) for job in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(_evaluate_job, work))

    return [row for (_, row) in sorted(zip(keys, rows),
                                       key=lambda pair: pair[0])]


def sweep_free_energy(cfg, jobs=1):
    """Run a free-energy sweep; see run_sweep()."""
    if cfg.experiment != 'free-energy':
        raise ValueError('Configuration is for a ‘%s’ sweep.' %
                         cfg.experiment)
    return run_sweep(cfg, jobs)


def sweep_ergotropy(cfg, jobs=1):
    """Run a maximized daemonic ergotropy sweep; see run_sweep()."""
    if cfg.experiment != 'ergotropy':
        raise ValueError('Configuration is for a ‘%s’ sweep.' %
                         cfg.experiment)
    return run_sweep(cfg, jobs)


def write_csv(rows, stream):
    """Write rows with the fixed header to an open text stream."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.fields())


def read_csv(stream):
    """
    Read rows written by write_csv().

    Raises:
        ValueError: if the header or a row is malformed.
    """
    reader = csv.reader(stream)
    header = next(reader, None)
    if header != CSV_HEADER:
        raise ValueError('Unexpected CSV header ‘%s’.' %
                         ','.join(header or []))
    rows = []
    for fields in reader:
        if not fields:
            continue
        if len(fields) != len(CSV_HEADER):
            raise ValueError('Row ‘%s’ has %i fields, expected %i.' %
                             (','.join(fields), len(fields),
                              len(CSV_HEADER)))
        params = None
        if fields[7]:
            params = ParamVector(*[float(f) for f in fields[7:11]])
        probabilities = [float(f) for f in fields[5:7] if f]
        rows.append(SweepRow(fields[0], float(fields[1]), fields[3],
                             float(fields[4]), probabilities, params))
    return rows
