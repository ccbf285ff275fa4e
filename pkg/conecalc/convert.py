r'''
Convert nested data: flattening, block reshaping, and conversion to plain (YAML-friendly) types.

(c) conecalc developers, MIT
'''

import collections.abc
from fractions import Fraction


def _flatten_detail(data):
    r'''
Detail of :py:func:`flatten`.
Not part of public API.
    '''

    for item in data:
        if isinstance(item, collections.abc.Iterable) and not isinstance(item, str):
            for x in flatten(item):
                yield x
        else:
            yield item


def flatten(data):
    r'''
Flatten a nested list to a one dimensional list (row-major).
    '''
    return list(_flatten_detail(data))


def blocks(data, size):
    r'''
Split a flat list in consecutive blocks of ``size`` items (inverse of :py:func:`flatten`).
    '''

    if size < 1 or len(data) % size != 0:
        raise ValueError('Cannot split {0:d} items in blocks of {1:d}'.format(len(data), size))

    return [list(data[i: i + size]) for i in range(0, len(data), size)]


def to_builtin(data):
    r'''
Recursively convert a report to plain types:
:py:class:`fractions.Fraction` becomes its text (``"-1/2"``), tuples become lists.
    '''

    if isinstance(data, Fraction):
        return str(data)

    if isinstance(data, dict):
        return {str(key): to_builtin(value) for key, value in data.items()}

    if isinstance(data, (list, tuple)):
        return [to_builtin(item) for item in data]

    return data
