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
Module providing a `ProcessParser` object for reading process files written
by ProcessFormatter.
"""


import math

import numpy as np

from qprocess.log import FileLog
from qprocess.processes import ProcessMatrix, ProcessVector, SlotSpec
from qprocess.tensor import SystemLayout


_HEADER_KEYS = ('kind', 'past', 'slots', 'future', 'rows', 'cols')

# Largest array, in entries, a process file may declare (a 12-qubit matrix).
MAX_ENTRIES = 1 << 24


class ProcessParsingLog(FileLog):

    """A specialized FileLog subclass for process file parsing issues"""

    def __init__(self, filename):
        """
        Construct a new ProcessParsingLog.

        Args:
            filename: str, the name of the file being parsed.
        """
        super(ProcessParsingLog, self).__init__(filename, 'process-parser', (
            'missing-header',
            'invalid-header',
            'invalid-entry',
            'dimension-mismatch',
            'duplicate-entry',
            'too-large',
            'invalid-encoding',
        ))


def _parse_words(value, fields):
    """Split `a:1 b:2` words into tuples of `fields` parts; ints after the
    label."""
    result = []
    for word in value.split():
        parts = word.split(':')
        if len(parts) != fields or not parts[0]:
            raise ValueError('Malformed system ‘%s’.' % word)
        result.append(tuple([parts[0]] + [int(p) for p in parts[1:]]))
    return result


class ProcessParser(object):

    """
    Parse a process file.

    Every problem is logged with its line number; parse() returns None if
    anything was logged.
    """

    def __init__(self, filename):
        """
        Construct a new ProcessParser.

        Args:
            filename: path to the process file to parse
        """
        self._filename = filename
        self._log = ProcessParsingLog(filename)

    @staticmethod
    def get_output_codes():
        """Return a list of all possible output codes."""
        return ProcessParsingLog(None).issue_codes

    def get_output(self):
        """Return a list of all logged parser messages."""
        return self._log.issues

    def _parse_header(self, lines):
        """Return (header dict, index of the first entry line) or None."""
        header = {}
        for (index, line) in enumerate(lines):
            line_number = index + 1
            if line.strip() == '---':
                missing = [key for key in _HEADER_KEYS if key not in header]
                for key in missing:
                    self._log.log_issue('missing-header',
                                        'Missing header ‘%s’.' % key)
                return (None if missing else header), index + 1
            key, sep, value = line.partition(':')
            key = key.strip()
            if not sep or key not in _HEADER_KEYS:
                self._log.log_line_issue('invalid-header', line_number,
                                         'Unknown header line ‘%s’.' %
                                         line.strip())
            elif key in header:
                self._log.log_line_issue('invalid-header', line_number,
                                         'Header ‘%s’ given twice.' % key)
            else:
                header[key] = (value.strip(), line_number)

        self._log.log_issue('missing-header', 'Missing ‘---’ separator.')
        return None, len(lines)

    def _build(self, header):
        """Return (empty process, rows, cols) or None."""
        try:
            kind = header['kind'][0]
            if kind not in ('matrix', 'vector'):
                raise ValueError('Unknown kind ‘%s’.' % kind)
            past = _parse_words(header['past'][0], 2)
            future = _parse_words(header['future'][0], 2)
            slots = [SlotSpec(*word)
                     for word in _parse_words(header['slots'][0], 3)]
            rows = int(header['rows'][0])
            cols = int(header['cols'][0])
        except ValueError as err:
            self._log.log_issue('invalid-header', str(err))
            return None

        systems = list(past)
        for slot in slots:
            systems += [slot.input, slot.output]
        try:
            layout = SystemLayout(systems + future)
        except ValueError as err:
            self._log.log_issue('dimension-mismatch', str(err))
            return None

        # Sizes are checked against the declared systems before allocation.
        if rows != layout.dim:
            self._log.log_line_issue('dimension-mismatch',
                                     header['rows'][1],
                                     'Expected %i rows for the declared '
                                     'systems, got %i.' % (layout.dim, rows))
            return None
        expected = 1 if kind == 'vector' else rows
        if cols != expected:
            self._log.log_line_issue('dimension-mismatch',
                                     header['cols'][1],
                                     'Expected %i columns, got %i.' %
                                     (expected, cols))
            return None
        if rows * cols > MAX_ENTRIES:
            self._log.log_issue('too-large',
                                'A %i×%i array exceeds the limit of %i '
                                'entries.' % (rows, cols, MAX_ENTRIES))
            return None

        try:
            if kind == 'vector':
                process = ProcessVector(np.zeros(rows), past, slots, future)
            else:
                process = ProcessMatrix(np.zeros((rows, rows)), past, slots,
                                        future)
        except ValueError as err:
            self._log.log_issue('dimension-mismatch', str(err))
            return None
        return process, rows, cols

    def _parse_entries(self, lines, first, rows, cols):
        data = np.zeros((rows, cols), dtype=np.complex128)
        seen = set()
        for index in range(first, len(lines)):
            line_number = index + 1
            words = lines[index].split()
            if not words:
                continue
            try:
                if len(words) != 4:
                    raise ValueError('expected ‘row col re im’')
                row, col = int(words[0]), int(words[1])
                value = complex(float(words[2]), float(words[3]))
                if not (math.isfinite(value.real) and
                        math.isfinite(value.imag)):
                    raise ValueError('non-finite value')
            except ValueError as err:
                self._log.log_line_issue('invalid-entry', line_number,
                                         'Invalid entry ‘%s’: %s.' %
                                         (lines[index].strip(), err))
                continue
            if not (0 <= row < rows and 0 <= col < cols):
                self._log.log_line_issue('invalid-entry', line_number,
                                         'Entry (%i, %i) lies outside the '
                                         '%i×%i array.' %
                                         (row, col, rows, cols))
                continue
            if (row, col) in seen:
                self._log.log_line_issue('duplicate-entry', line_number,
                                         'Entry (%i, %i) given twice.' %
                                         (row, col))
                continue
            seen.add((row, col))
            data[row, col] = value
        return data

    def parse(self):
        """
        Parse the process file.

        Returns:
            A ProcessMatrix or ProcessVector. If parsing fails, None is
            returned.

        Raises:
            OSError: if the file cannot be read.
        """
        self._log.clear()
        try:
            with open(self._filename, 'r', encoding='utf-8') as source:
                lines = source.read().splitlines()
        except UnicodeDecodeError as err:
            self._log.log_issue('invalid-encoding',
                                'File is not valid UTF-8: %s.' % err.reason)
            return None

        header, first = self._parse_header(lines)
        if header is None or self._log.issues:
            return None
        built = self._build(header)
        if built is None:
            return None
        process, rows, cols = built
        data = self._parse_entries(lines, first, rows, cols)
        if self._log.issues:
            return None

        if isinstance(process, ProcessVector):
            process.vector = data.reshape(-1)
        else:
            process.matrix = data
        return process
