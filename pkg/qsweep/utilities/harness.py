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
Experiment harness. Runs free-energy and daemonic-ergotropy sweeps over the
process zoo, evaluates single points, validates processes and writes plot
scripts.

Exit status is 0 on success, 1 if a validity check fails and 2 on usage,
parse or configuration errors.
"""

import argparse
import os
import sys

from qprocess.processes import validate_sampled
from qprocess.processparser import ProcessParser
from qsweep.plotformatter import emit_plot
from qsweep.sweep import (build_process, evaluate_point, read_csv,
                          sweep_ergotropy, sweep_free_energy, write_csv)
from qsweep.sweepconfig import (EXPERIMENTS, PROCESS_NAMES, SweepConfig,
                                SweepConfigParser)


EXIT_SUCCESS = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

# Environment variable giving the default number of sweep workers.
JOBS_VARIABLE = 'QSWEEP_JOBS'


class UsageError(Exception):

    """Raised for command line, parse and configuration errors."""


def _format_level(level, enable_colour=True, justified_length=0):
    """Format an issue domain as a human-readable level."""
    out = 'note' if level == 'info' else 'error'
    if justified_length > 0:
        out = out.rjust(justified_length)
    if enable_colour:
        colour = '\033[96;1m' if level == 'info' else '\033[91;1m'
        out = colour + out + '\033[0m'
    return out


def _print_output(output, enable_colour=None):
    """Print logged issues to stderr as `file: level: code: message`."""
    if enable_colour is None:
        enable_colour = sys.stderr.isatty()
    try:
        max_code_len = max([len(o[2]) for o in output])
    except ValueError:
        max_code_len = 0

    for (filename, level, code, message) in output:
        formatted_level = _format_level(level, enable_colour)
        formatted_code = code.rjust(max_code_len)
        if enable_colour:
            formatted_code = '\033[1m%s\033[0m' % formatted_code

        if filename is None:
            line = '%s: %s: %s\n' % (formatted_level, formatted_code, message)
        else:
            line = '%s: %s: %s: %s\n' % \
                   (filename, formatted_level, formatted_code, message)
        sys.stderr.write(line)


def _load_config(args, experiment=None):
    """Return the SweepConfig named on the command line, with overrides."""
    if args.config is None:
        if experiment is None:
            raise UsageError('A configuration file is required.')
        cfg = SweepConfig(experiment)
    else:
        parser = SweepConfigParser(args.config)
        try:
            cfg = parser.parse()
        except OSError as err:
            raise UsageError('%s: %s' % (args.config, err.strerror))
        if cfg is None:
            _print_output(parser.get_output())
            raise UsageError('Invalid configuration ‘%s’.' % args.config)

    if experiment is not None and cfg.experiment != experiment:
        raise UsageError('Configuration ‘%s’ is for a ‘%s’ sweep.' %
                         (args.config, cfg.experiment))
    return _with_seed(cfg, args.seed)


def _with_seed(cfg, seed):
    if seed is None:
        return cfg
    try:
        return cfg.replace(seed=seed)
    except ValueError as err:
        raise UsageError(str(err))


def _job_count(args):
    """Return the worker count from --jobs or the environment."""
    if args.jobs is not None:
        jobs = args.jobs
    else:
        value = os.environ.get(JOBS_VARIABLE, '1')
        try:
            jobs = int(value)
        except ValueError:
            raise UsageError('Invalid %s ‘%s’.' % (JOBS_VARIABLE, value))
    if jobs < 1:
        raise UsageError('Job count must be at least 1, got %i.' % jobs)
    return jobs


def _write_rows(rows, path):
    if path is None:
        write_csv(rows, sys.stdout)
    else:
        with open(path, 'w') as output:
            write_csv(rows, output)


def _command_sweep(args, experiment):
    cfg = _load_config(args, experiment)
    jobs = _job_count(args)
    if experiment == 'free-energy':
        rows = sweep_free_energy(cfg, jobs)
    else:
        rows = sweep_ergotropy(cfg, jobs)
    _write_rows(rows, args.out or cfg['output'])
    return EXIT_SUCCESS


def _command_eval(args):
    if args.config is None:
        cfg = _with_seed(SweepConfig(args.experiment), args.seed)
    else:
        cfg = _load_config(args)
    name = args.process or cfg['processes'][0]
    if name not in PROCESS_NAMES:
        raise UsageError('Unknown process ‘%s’.' % name)
    r = cfg['r-start'] if args.r is None else args.r
    if not 0.0 <= r <= 1.0:
        raise UsageError('r must lie in [0, 1], got %r.' % r)

    row = evaluate_point(cfg, name, r)
    for (key, value) in zip(['process', 'r', 'delta_rho', 'figure', 'value',
                             'prob_0', 'prob_1', 'm', 'phi', 'x', 'chi'],
                            row.fields()):
        if value != '':
            sys.stdout.write('%s=%s\n' % (key, value))
    return EXIT_SUCCESS


def _command_validate(args):
    if (args.builtin is None) == (args.file is None):
        raise UsageError('Give exactly one of --builtin and --file.')
    if args.samples < 1:
        raise UsageError('At least one sample is needed.')

    if args.builtin is not None:
        if args.builtin not in PROCESS_NAMES:
            raise UsageError('Unknown process ‘%s’.' % args.builtin)
        name = args.builtin
        process, _, _ = build_process(name, SweepConfig('free-energy'))
    else:
        name = args.file
        parser = ProcessParser(args.file)
        try:
            process = parser.parse()
        except OSError as err:
            raise UsageError('%s: %s' % (args.file, err.strerror))
        if process is None:
            _print_output(parser.get_output())
            raise UsageError('Invalid process file ‘%s’.' % args.file)

    report = validate_sampled(process, args.samples,
                              0 if args.seed is None else args.seed)
    _print_output(report.log.attributed_to(name))
    sys.stdout.write('%s: %s\n' % (name,
                                   'valid' if report.passed else 'INVALID'))
    for (key, value) in report.key_values():
        sys.stdout.write('%s=%s\n' % (key, value))
    return EXIT_SUCCESS if report.passed else EXIT_INVALID


def _command_emit_plot(args):
    try:
        with open(args.csv, 'r') as source:
            rows = read_csv(source)
    except OSError as err:
        raise UsageError('%s: %s' % (args.csv, err.strerror))
    except ValueError as err:
        raise UsageError('%s: %s' % (args.csv, err))
    if not rows:
        raise UsageError('%s: no rows to plot.' % args.csv)
    out = args.out or 'plot.py'
    emit_plot(rows, out)
    return EXIT_SUCCESS


def _build_parser():
    parser = argparse.ArgumentParser(
        description='Thermodynamics of higher-order quantum processes')
    subparsers = parser.add_subparsers(dest='command')

    for command in ('sweep-free-energy', 'sweep-ergotropy'):
        sub = subparsers.add_parser(command, help='Run a %s sweep' %
                                    command[len('sweep-'):])
        sub.add_argument('--config', type=str, help='Sweep configuration XML')
        sub.add_argument('--out', type=str, help='Output CSV file')
        sub.add_argument('--seed', type=int, help='Optimizer seed')
        sub.add_argument('--jobs', type=int,
                         help='Worker processes (default: $%s or 1)' %
                              JOBS_VARIABLE)

    sub = subparsers.add_parser('eval', help='Evaluate a single point')
    sub.add_argument('--config', type=str, help='Sweep configuration XML')
    sub.add_argument('--experiment', choices=EXPERIMENTS,
                     default='free-energy',
                     help='Experiment when no configuration is given')
    sub.add_argument('--process', type=str,
                     help='Process (%s)' % ', '.join(PROCESS_NAMES))
    sub.add_argument('--r', type=float, help='Target ground population')
    sub.add_argument('--seed', type=int, help='Optimizer seed')

    sub = subparsers.add_parser('validate', help='Validate a process')
    sub.add_argument('--builtin', type=str,
                     help='Process (%s)' % ', '.join(PROCESS_NAMES))
    sub.add_argument('--file', type=str, help='Process file')
    sub.add_argument('--samples', type=int, default=20,
                     help='Random channel tuples to try')
    sub.add_argument('--seed', type=int, help='Sampling seed')

    sub = subparsers.add_parser('emit-plot',
                                help='Write a plot script for a sweep CSV')
    sub.add_argument('csv', type=str, help='Sweep CSV file')
    sub.add_argument('--out', type=str, help='Output script')

    return parser


def run(argv=None):
    """Run the harness and return its exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_SUCCESS if err.code == 0 else EXIT_USAGE

    commands = {
        'sweep-free-energy': lambda: _command_sweep(args, 'free-energy'),
        'sweep-ergotropy': lambda: _command_sweep(args, 'ergotropy'),
        'eval': lambda: _command_eval(args),
        'validate': lambda: _command_validate(args),
        'emit-plot': lambda: _command_emit_plot(args),
    }
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    try:
        return commands[args.command]()
    except UsageError as err:
        sys.stderr.write('%s: error: %s\n' % (parser.prog, err))
        return EXIT_USAGE


def main():
    """Main utility implementation."""
    sys.exit(run())


if __name__ == '__main__':
    main()
