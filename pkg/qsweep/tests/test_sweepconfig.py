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
Unit tests for qsweep.sweepconfig
"""


# pylint: disable=missing-docstring


from qsweep.sweepconfig import SweepConfig, SweepConfigParser
import math
import os
from numpy.testing import assert_allclose
import tempfile
import unittest


def _create_temp_xml_file(xml):
    """Create a temporary XML file with the given contents."""
    tmp_fd, tmp_name = tempfile.mkstemp(suffix='.xml', text=True)
    with os.fdopen(tmp_fd, 'wt') as xml_fd:
        xml_fd.write(xml)
    return tmp_name


def _test_parser(xml):
    """Build a SweepConfigParser for the XML snippet and parse it."""
    tmpfile = _create_temp_xml_file(xml)
    parser = SweepConfigParser(tmpfile)
    cfg = parser.parse()
    os.unlink(tmpfile)
    return parser, cfg, tmpfile


class TestSweepConfig(unittest.TestCase):

    def test_free_energy_defaults(self):
        cfg = SweepConfig('free-energy')
        self.assertEqual(cfg.experiment, 'free-energy')
        self.assertEqual(cfg['processes'],
                         ['composition', 'switch2', 'ising2', 'lugano'])
        self.assertEqual((cfg['p'], cfg['q'], cfg['lambda']),
                         (0.8, 0.8, 1.0))
        self.assertIsNone(cfg['beta'])
        grid = cfg.r_grid()
        self.assertEqual(len(grid), 41)
        self.assertAlmostEqual(grid[20], 0.5)

    def test_ergotropy_defaults(self):
        cfg = SweepConfig('ergotropy')
        self.assertAlmostEqual(cfg['p'], 1 / 3)
        self.assertEqual(cfg['measurement'], 'optimize')
        self.assertEqual(cfg['target'], 'pure')
        self.assertEqual(len(cfg.r_grid()), 11)

    def test_overrides(self):
        cfg = SweepConfig('ergotropy', r_points=3, seed=3,
                          processes=['switch3'])
        assert_allclose(cfg.r_grid(), [0.0, 0.5, 1.0])
        self.assertEqual(cfg['seed'], 3)
        self.assertEqual(cfg['processes'], ['switch3'])

    def test_single_point(self):
        cfg = SweepConfig('free-energy', r_start=0.25, r_points=1)
        assert_allclose(cfg.r_grid(), [0.25])

    def test_replace(self):
        cfg = SweepConfig('free-energy', p=0.6)
        other = cfg.replace(seed=9)
        self.assertEqual(other['seed'], 9)
        self.assertEqual(other['p'], 0.6)
        self.assertEqual(cfg['seed'], 7)
        self.assertEqual(other.to_dict()['experiment'], 'free-energy')

    def test_invalid(self):
        for kwargs in ({'p': 1.5}, {'colour': 'red'}, {'r_points': 0},
                       {'processes': ['nope']}, {'processes': []},
                       {'r_start': 0.8, 'r_stop': 0.2},
                       {'replacement_state': [1.0, 1.0, 0.0]},
                       {'composition3_order': 'ABB'},
                       {'lambda_': 0.5}, {'tolerance': math.nan}):
            with self.assertRaises(ValueError):
                SweepConfig('free-energy', **kwargs)
        with self.assertRaises(ValueError):
            SweepConfig('bogus')


class TestParserSuccess(unittest.TestCase):

    def test_full(self):
        (parser, cfg, _) = _test_parser(
            '<sweep>\n'
            '  <!-- Small sweep -->\n'
            '  <experiment>ergotropy</experiment>\n'
            '  <processes>\n'
            '    <item>composition</item>\n'
            '    <item>lugano</item>\n'
            '  </processes>\n'
            '  <replacement-state><item>0</item><item>0.5</item>'
            '<item>0</item></replacement-state>\n'
            '  <r-points> 5 </r-points>\n'
            '  <beta>1.5</beta>\n'
            '  <output>out.csv</output>\n'
            '</sweep>\n')
        self.assertEqual(parser.get_output(), [])
        self.assertEqual(cfg.experiment, 'ergotropy')
        self.assertEqual(cfg['processes'], ['composition', 'lugano'])
        self.assertEqual(cfg['replacement-state'], [0.0, 0.5, 0.0])
        self.assertEqual(cfg['r-points'], 5)
        self.assertEqual(cfg['beta'], 1.5)
        self.assertEqual(cfg['output'], 'out.csv')
        self.assertEqual(cfg['seed'], 7)

    def test_minimal(self):
        (parser, cfg, _) = _test_parser(
            '<sweep><experiment>free-energy</experiment></sweep>')
        self.assertEqual(parser.get_output(), [])
        self.assertEqual(cfg.to_dict(), SweepConfig('free-energy').to_dict())


class TestParserErrors(unittest.TestCase):

    # pylint: disable=invalid-name
    def assertOutput(self, xml, partial_output):  # noqa
        (parser, cfg, filename) = _test_parser(xml)
        self.assertEqual(cfg, None)
        actual_output = \
            [(filename, 'config', i[0], i[1]) for i in partial_output]
        self.assertEqual(parser.get_output(), actual_output)

    # pylint: disable=invalid-name
    def assertCodes(self, xml, codes):  # noqa
        (parser, cfg, _) = _test_parser(xml)
        self.assertEqual(cfg, None)
        self.assertEqual([i[2] for i in parser.get_output()], codes)

    def test_output_codes(self):
        self.assertEqual(SweepConfigParser.get_output_codes(),
                         {'unknown-key', 'invalid-value', 'missing-key',
                          'invalid-root', 'syntax-error'})

    def test_invalid_root(self):
        self.assertOutput('<config/>', [
            ('invalid-root', 'line 1: Unknown root element ‘config’.'),
        ])

    def test_syntax_error(self):
        self.assertCodes('<sweep>\n<experiment>', ['syntax-error'])

    def test_unknown_key(self):
        self.assertOutput(
            '<sweep>\n'
            '<experiment>free-energy</experiment>\n'
            '<colour>red</colour>\n'
            '</sweep>', [
                ('unknown-key', 'line 3: Unknown key ‘colour’.'),
            ])

    def test_out_of_range(self):
        self.assertOutput(
            '<sweep>\n'
            '<experiment>free-energy</experiment>\n'
            '<p>1.5</p>\n'
            '</sweep>', [
                ('invalid-value', 'line 3: Invalid value for ‘p’: Key ‘p’ '
                                  'must lie in [0, 1], got 1.5.'),
            ])

    def test_not_a_number(self):
        self.assertCodes(
            '<sweep>\n'
            '<experiment>free-energy</experiment>\n'
            '<r-points>many</r-points>\n'
            '</sweep>', ['invalid-value'])

    def test_repeated_key(self):
        self.assertOutput(
            '<sweep>\n'
            '<experiment>free-energy</experiment>\n'
            '<p>0.5</p>\n'
            '<p>0.6</p>\n'
            '</sweep>', [
                ('invalid-value', 'line 4: Key ‘p’ given twice.'),
            ])

    def test_bad_list(self):
        self.assertOutput(
            '<sweep>\n'
            '<experiment>free-energy</experiment>\n'
            '<processes><name>switch2</name></processes>\n'
            '</sweep>', [
                ('invalid-value', 'line 3: Invalid value for ‘processes’: '
                                  'Unexpected element ‘name’ in list.'),
            ])

    def test_scalar_with_children(self):
        self.assertCodes(
            '<sweep>\n'
            '<experiment><item>free-energy</item></experiment>\n'
            '</sweep>', ['invalid-value'])

    def test_missing_experiment(self):
        self.assertOutput('<sweep>\n<p>0.5</p>\n</sweep>', [
            ('missing-key', 'line 1: Missing key ‘experiment’.'),
        ])

    def test_inconsistent_range(self):
        self.assertOutput(
            '<sweep>\n'
            '<experiment>free-energy</experiment>\n'
            '<r-start>0.9</r-start>\n'
            '<r-stop>0.1</r-stop>\n'
            '</sweep>', [
                ('invalid-value',
                 'line 1: Key ‘r-start’ must not exceed ‘r-stop’.'),
            ])

    def test_missing_file(self):
        parser = SweepConfigParser('/nonexistent/sweep.xml')
        with self.assertRaises(OSError):
            parser.parse()


if __name__ == '__main__':
    # Run test suite
    unittest.main()
