# -*- coding: utf-8 -*-
#
# Copyright © 2015, 2016 Collabora Ltd.
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
Issue logs shared by the validators and parsers.

Nothing in qprocess writes to a global logger. Validators and parsers collect
`(filename, domain, code, message)` tuples in a `Log` instead, and callers
decide how to print them.
"""


class Log(object):

    """
    Base issue log.

    Every issue is a `(filename, domain, code, message)` tuple. A negative
    process matrix eigenvalue found by validate_sampled(), for example, is
    logged as `(None, 'validity', 'not-psd', 'Process matrix has ...')`.
    """

    def __init__(self, domain='default', codes=()):
        """
        Construct a new Log.

        Args:
            domain: str, the component the issues come from
            codes: iterable of issue codes to register up front
        """
        self.issues = []
        self.issue_codes = set(codes)
        self.domain = domain

    def register_issue_code(self, code):
        """
        Register a new issue code.

        Duplicate codes will be silently ignored.

        Args:
            code: str, an issue code, for example `not-psd`
        """
        self.issue_codes.add(code)

    def log_issue(self, code, message):
        """
        Log a new issue.

        Args:
            code: str, A registered code for that issue.
            message: str, A message describing the issue.
        """
        assert code in self.issue_codes
        self.issues.append(self._create_entry(code, message))

    # pylint: disable=no-self-use
    def _create_entry(self, code, message):
        return None, self.domain, code, message

    def has_issues(self):
        """Return True if any issue has been logged since the last clear."""
        return bool(self.issues)

    def codes(self):
        """Return the codes of the logged issues, in logging order."""
        return [issue[2] for issue in self.issues]

    def attributed_to(self, filename):
        """Return the issues with their filename replaced by `filename`."""
        return [(filename,) + issue[1:] for issue in self.issues]

    def clear(self):
        """Clear the issue list."""
        self.issues = []


class ValidityLog(Log):

    """Specialized Log subclass for channel and process validity checks"""

    def __init__(self):
        """Construct a new ValidityLog"""
        super(ValidityLog, self).__init__('validity', (
            'not-psd',
            'not-trace-preserving',
            'not-cptp-output',
            'not-hermitian',
        ))


class FileLog(Log):

    """A Log whose entries are attributed to a named input file."""

    def __init__(self, filename, domain='default', codes=()):
        """
        Construct a new FileLog.

        Args:
            filename: str, the name of the file being read, or None
            domain: str, the component reading the file
            codes: iterable of issue codes to register up front
        """
        super(FileLog, self).__init__(domain, codes)
        self.filename = filename

    def log_line_issue(self, code, line_number, message):
        """Log an issue prefixed with the source line it was found on."""
        if line_number is None or line_number < 0:
            self.log_issue(code, message)
        else:
            self.log_issue(code, 'line %i: %s' % (line_number, message))

    def _create_entry(self, code, message):
        return self.filename, self.domain, code, message
