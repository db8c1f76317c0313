from __future__ import absolute_import

import logging
import sys

__all__ = ['configure_logging', 'TableLogger']

LOG_FORMAT = '%(message)s'


def configure_logging(verbose=False, log_file=None):
    """Diagnostics go to stderr; stdout carries the reports."""
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT, force=True)
    if log_file:
        fh = logging.FileHandler(log_file)
        fh.setFormatter(logging.Formatter(LOG_FORMAT))
        logging.getLogger().addHandler(fh)


class TableLogger(object):
    '''Write a tab-separated table: one header line, then one line per row.'''

    def __init__(self, stream=None, title=None):
        self.stream = sys.stdout if stream is None else stream
        self.title = '' if title is None else title
        self.names = []
        self.rows = []

    def set_names(self, names):
        self.names = list(names)
        if self.title:
            self.stream.write(self.title + '\n')
        self.stream.write('\t'.join(self.names) + '\n')
        self.stream.flush()

    def append(self, values):
        assert len(self.names) == len(values), 'Values do not match names'
        self.rows.append(list(values))
        self.stream.write('\t'.join(str(v) for v in values) + '\n')
        self.stream.flush()
