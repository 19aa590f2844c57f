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
Sweep configuration: the `SweepConfig` object and a `SweepConfigParser` for
reading it from XML.

A configuration file has a `<sweep>` root with one child element per key.
Scalars are the element text; lists use `<item>` children:

    <sweep>
      <experiment>free-energy</experiment>
      <processes>
        <item>composition</item>
        <item>switch2</item>
      </processes>
      <p>0.8</p>
    </sweep>

Keys not given take defaults that depend on the experiment. Unknown keys are
errors.
"""


import math

import numpy as np
# pylint: disable=no-name-in-module
from lxml import etree

from qprocess.log import FileLog


EXPERIMENTS = ('free-energy', 'ergotropy')

PROCESS_NAMES = ('composition', 'composition3', 'mixture', 'switch2',
                 'switch3', 'ising2', 'ising3', 'lugano', 'replacement')


class ConfigLog(FileLog):

    """A specialized FileLog subclass for configuration issues"""

    def __init__(self, filename):
        """
        Construct a new ConfigLog.

        Args:
            filename: str, the name of the configuration file.
        """
        super(ConfigLog, self).__init__(filename, 'config', (
            'unknown-key',
            'invalid-value',
            'missing-key',
            'invalid-root',
            'syntax-error',
        ))


def _unit(value):
    if not 0.0 <= value <= 1.0:
        raise ValueError('must lie in [0, 1]')


def _positive(value):
    if not value > 0:
        raise ValueError('must be positive')


def _at_least_one(value):
    if value < 1:
        raise ValueError('must be at least 1')


def _non_negative(value):
    if value < 0:
        raise ValueError('must not be negative')


def _choice(*choices):
    def _check(value):
        if value not in choices:
            raise ValueError('must be one of %s' % ', '.join(choices))
    return _check


def _process_names(value):
    if not value:
        raise ValueError('must not be empty')
    for name in value:
        if name not in PROCESS_NAMES:
            raise ValueError('unknown process ‘%s’' % name)
    if len(set(value)) != len(value):
        raise ValueError('must not repeat a process')


def _bloch(value):
    if len(value) != 3:
        raise ValueError('must have three components')
    if np.linalg.norm(value) > 1.0 + 1e-12:
        raise ValueError('must have norm at most 1')


def _order(value):
    if sorted(value) != ['A', 'B', 'C']:
        raise ValueError('must be an ordering of A, B and C')


# Key name → (type, check). Types are 'str', 'float', 'int', 'str-list' and
# 'float-list'.
SCHEMA = {
    'experiment': ('str', _choice(*EXPERIMENTS)),
    'processes': ('str-list', _process_names),
    'p': ('float', _unit),
    'q': ('float', _unit),
    'lambda': ('float', _unit),
    'mixture-weight': ('float', _unit),
    'replacement-state': ('float-list', _bloch),
    'r-start': ('float', _unit),
    'r-stop': ('float', _unit),
    'r-points': ('int', _at_least_one),
    'target': ('str', _choice('diagonal', 'pure')),
    'ancilla-x': ('float', None),
    'ancilla-chi': ('float', None),
    'measurement': ('str', _choice('fixed', 'optimize')),
    'measurement-m': ('float', _unit),
    'measurement-phi': ('float', None),
    'lugano-auxiliary': ('str', _choice('zero', 'plus')),
    'composition3-order': ('str', _order),
    'beta': ('float', _positive),
    'restarts': ('int', _at_least_one),
    'seed': ('int', _non_negative),
    'tolerance': ('float', _positive),
    'max-iterations': ('int', _at_least_one),
    'output': ('str', None),
}

_COMMON_DEFAULTS = {
    'mixture-weight': 0.5,
    'replacement-state': [0.0, 0.0, -1.0],
    'r-start': 0.0,
    'r-stop': 1.0,
    'ancilla-x': math.pi / 2,
    'ancilla-chi': 0.0,
    'measurement-m': 0.5,
    'measurement-phi': 0.0,
    'composition3-order': 'ABC',
    'beta': None,
    'restarts': 32,
    'seed': 7,
    'tolerance': 1e-8,
    'max-iterations': 2000,
    'output': None,
}

DEFAULTS = {
    'free-energy': dict(_COMMON_DEFAULTS, **{
        'processes': ['composition', 'switch2', 'ising2', 'lugano'],
        'p': 0.8, 'q': 0.8, 'lambda': 1.0,
        'r-points': 41,
        'target': 'diagonal',
        'measurement': 'fixed',
        'lugano-auxiliary': 'zero',
    }),
    'ergotropy': dict(_COMMON_DEFAULTS, **{
        'processes': ['composition', 'switch2', 'ising2'],
        'p': 1.0 / 3, 'q': 0.0, 'lambda': 0.5,
        'r-points': 11,
        'target': 'pure',
        'measurement': 'optimize',
        'lugano-auxiliary': 'plus',
    }),
}


def check_value(key, value):
    """Raise ValueError with a readable message if value is invalid."""
    if key not in SCHEMA:
        raise ValueError('Unknown key ‘%s’.' % key)
    if value is None:
        return
    kind, check = SCHEMA[key]
    if kind in ('float', 'float-list'):
        values = value if kind == 'float-list' else [value]
        if not all(math.isfinite(v) for v in values):
            raise ValueError('Key ‘%s’ must be finite.' % key)
    if check is not None:
        try:
            check(value)
        except ValueError as err:
            raise ValueError('Key ‘%s’ %s, got %r.' % (key, err, value))


class SweepConfig(object):

    """
    The parameters of one sweep.

    Values are read with `cfg[key]` using the XML key names, for example
    `cfg['r-points']`.
    """

    def __init__(self, experiment, **values):
        """
        Construct a new SweepConfig.

        Args:
            experiment: 'free-energy' or 'ergotropy'
            values: keys to override, with dashes written as underscores

        Raises:
            ValueError: if a key is unknown or a value is invalid.
        """
        check_value('experiment', experiment)
        self._values = dict(DEFAULTS[experiment])
        self._values['experiment'] = experiment
        for (name, value) in values.items():
            key = name.replace('_', '-')
            check_value(key, value)
            self._values[key] = value
        if self['r-start'] > self['r-stop']:
            raise ValueError('Key ‘r-start’ must not exceed ‘r-stop’.')

    def __getitem__(self, key):
        return self._values[key]

    @property
    def experiment(self):
        """The experiment kind."""
        return self['experiment']

    def r_grid(self):
        """Return the r values of the sweep."""
        if self['r-points'] == 1:
            return np.array([self['r-start']])
        return np.linspace(self['r-start'], self['r-stop'],
                           self['r-points'])

    def replace(self, **values):
        """Return a copy with some keys overridden."""
        merged = dict((key.replace('-', '_'), value)
                      for (key, value) in self._values.items()
                      if key != 'experiment')
        merged.update(values)
        return SweepConfig(self.experiment, **merged)

    def to_dict(self):
        """Return all keys and values."""
        return dict(self._values)


def _convert(kind, element):
    """Convert an element's content according to its schema type."""
    if kind.endswith('-list'):
        items = []
        for child in element:
            if not isinstance(child.tag, str):
                continue
            if child.tag != 'item':
                raise ValueError('Unexpected element ‘%s’ in list.' %
                                 child.tag)
            items.append(_convert_scalar(kind[:-5], child.text))
        return items
    if len([c for c in element if isinstance(c.tag, str)]):
        raise ValueError('Expected a scalar value.')
    return _convert_scalar(kind, element.text)


def _convert_scalar(kind, text):
    text = (text or '').strip()
    if kind == 'float':
        return float(text)
    if kind == 'int':
        return int(text)
    if not text:
        raise ValueError('Expected a non-empty string.')
    return text


class SweepConfigParser(object):

    """
    Parse a sweep configuration XML file.

    Every problem is logged with the line it was found on; parse() returns
    None if anything was logged.
    """

    def __init__(self, filename):
        """
        Construct a new SweepConfigParser.

        Args:
            filename: path to the XML configuration file to parse
        """
        self._filename = filename
        self._log = ConfigLog(filename)

    @staticmethod
    def get_output_codes():
        """Return a list of all possible output codes."""
        return ConfigLog(None).issue_codes

    def get_output(self):
        """Return a list of all logged parser messages."""
        return self._log.issues

    def _get_root(self):
        try:
            root = etree.parse(self._filename).getroot()
        except etree.XMLSyntaxError as err:
            self._log.log_line_issue('syntax-error', err.lineno, err.msg)
            return None

        if root.tag != 'sweep':
            self._log.log_line_issue('invalid-root', root.sourceline,
                                     'Unknown root element ‘%s’.' % root.tag)
            return None
        return root

    def parse(self):
        """
        Parse the configuration file.

        Returns:
            A SweepConfig. If parsing fails, None is returned.

        Raises:
            OSError: if the file cannot be read.
        """
        self._log.clear()
        root = self._get_root()
        if root is None:
            return None

        values = {}
        for element in root:
            # Skip comments and processing instructions.
            if not isinstance(element.tag, str):
                continue
            key = element.tag
            if key not in SCHEMA:
                self._log.log_line_issue('unknown-key', element.sourceline,
                                         'Unknown key ‘%s’.' % key)
                continue
            if key in values:
                self._log.log_line_issue('invalid-value', element.sourceline,
                                         'Key ‘%s’ given twice.' % key)
                continue
            try:
                value = _convert(SCHEMA[key][0], element)
                check_value(key, value)
            except ValueError as err:
                self._log.log_line_issue('invalid-value', element.sourceline,
                                         'Invalid value for ‘%s’: %s' %
                                         (key, err))
                continue
            values[key] = value

        if 'experiment' not in values:
            if not self._log.has_issues():
                self._log.log_line_issue('missing-key', root.sourceline,
                                         'Missing key ‘experiment’.')
            return None
        if self._log.has_issues():
            return None

        experiment = values.pop('experiment')
        try:
            return SweepConfig(experiment,
                               **dict((k.replace('-', '_'), v)
                                      for (k, v) in values.items()))
        except ValueError as err:
            self._log.log_line_issue('invalid-value', root.sourceline,
                                     str(err))
            return None
