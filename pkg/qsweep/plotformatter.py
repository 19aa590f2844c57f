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
Module providing a `PlotFormatter` object for turning sweep rows into a
self-contained matplotlib script.

The script embeds the data, so it can be run without qsweep installed.
Free-energy sweeps are plotted against r, ergotropy sweeps against δρ.
"""


_AXES = {
    'free-energy': ('r', 'Average free energy'),
    'ergotropy': ('δρ', 'Maximal daemonic ergotropy'),
}


class PlotFormatter(object):
    """
    Format sweep rows as a Python plotting script.

    All rows must come from a single sweep, so they share one figure kind.
    There is one series per process, in order of first appearance.
    """

    @staticmethod
    def axis_labels(figure):
        """Return the (x, y) axis labels for a figure kind."""
        try:
            return _AXES[figure]
        except KeyError:
            raise ValueError('Unknown figure ‘%s’.' % figure)

    @staticmethod
    def series(rows):
        """Return a list of (process, xs, ys) tuples."""
        order = []
        points = {}
        for row in rows:
            if row.process not in points:
                order.append(row.process)
                points[row.process] = ([], [])
            x = row.r if row.figure == 'free-energy' else row.delta_rho
            points[row.process][0].append(x)
            points[row.process][1].append(row.value)
        return [(name, points[name][0], points[name][1]) for name in order]

    def format(self, rows, image='sweep.png'):
        """
        Format rows as a script that saves a plot to `image`.

        Raises:
            ValueError: if there are no rows or they mix figure kinds.
        """
        if not rows:
            raise ValueError('No rows to plot.')
        figures = set(row.figure for row in rows)
        if len(figures) != 1:
            raise ValueError('Rows mix figures ‘%s’.' %
                             ', '.join(sorted(figures)))
        x_label, y_label = self.axis_labels(figures.pop())

        lines = [
            '#!/usr/bin/env python3',
            '# -*- coding: utf-8 -*-',
            'import matplotlib',
            'matplotlib.use(\'Agg\')',
            'import matplotlib.pyplot as plt',
            '',
            'SERIES = [',
        ]
        for (name, xs, ys) in self.series(rows):
            lines.append('    (%r,' % name)
            lines.append('     [%s],' % ', '.join('%.12g' % x for x in xs))
            lines.append('     [%s]),' % ', '.join('%.12g' % y for y in ys))
        lines += [
            ']',
            '',
            'figure, axes = plt.subplots()',
            'for (name, xs, ys) in SERIES:',
            '    axes.plot(xs, ys, marker=\'.\', label=name)',
            'axes.set_xlabel(%r)' % x_label,
            'axes.set_ylabel(%r)' % y_label,
            'axes.legend()',
            'figure.savefig(%r)' % image,
        ]
        return '\n'.join(lines) + '\n'


def emit_plot(rows, path, image=None):
    """Write the plotting script for rows to path."""
    if image is None:
        image = (path[:-3] if path.endswith('.py') else path) + '.png'
    script = PlotFormatter().format(rows, image)
    with open(path, 'w') as output:
        output.write(script)
