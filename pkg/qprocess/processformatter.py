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
Module providing a `ProcessFormatter` object for writing process matrices and
process vectors as plain text.

The format is a block of `key: value` header lines, a `---` separator, then
one `row col re im` line per non-zero entry. Floats are written with repr(),
so reading the file back with ProcessParser is exact.
"""


from qprocess.processes import ProcessVector


class ProcessFormatter(object):
    """
    Format a ProcessMatrix or ProcessVector as text.

    A process vector is written as a single column.
    """

    @staticmethod
    def format_systems(systems):
        """Format `(label, dim)` pairs as `label:dim` words."""
        return ' '.join('%s:%i' % system for system in systems)

    @staticmethod
    def format_slots(slots):
        """Format SlotSpecs as `label:input_dim:output_dim` words."""
        return ' '.join('%s:%i:%i' % (slot.label, slot.input_dim,
                                      slot.output_dim) for slot in slots)

    def format(self, process):
        """
        Format the process as a string.

        Args:
            process: ProcessMatrix or ProcessVector

        Returns:
            The formatted process, ending in a newline.
        """
        if isinstance(process, ProcessVector):
            kind = 'vector'
            data = process.vector.reshape(-1, 1)
        else:
            kind = 'matrix'
            data = process.matrix

        lines = [
            'kind: %s' % kind,
            'past: %s' % self.format_systems(process.past),
            'slots: %s' % self.format_slots(process.slots),
            'future: %s' % self.format_systems(process.future),
            'rows: %i' % data.shape[0],
            'cols: %i' % data.shape[1],
            '---',
        ]
        for (row, col) in zip(*data.nonzero()):
            value = data[row, col]
            lines.append('%i %i %r %r' % (row, col, float(value.real),
                                          float(value.imag)))
        return '\n'.join(lines) + '\n'

    def write(self, process, filename):
        """Format the process and write it to `filename`."""
        with open(filename, 'w', encoding='utf-8') as output:
            output.write(self.format(process))
