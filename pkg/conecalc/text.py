r'''
Plain-text instance files.

All formats ignore blank lines and everything after "#".
Vectors are written one per line as space-separated rationals, e.g. ``1 -1/2 3``.

Cone::

    dim 2
    vrep            # or "hrep" (normals), "open" (strict normals), "union K"
    1 0
    0 1

Union of cones::

    dim 2
    union 2
    part 1
    1 0
    part 2
    0 1
    -1 1

Family::

    dim 2
    family 2        # or "wholespace"
    set 1
    1 0
    set 2
    0 1
    1 1

Relation::

    lotteries 3     # or "acts 2 3"
    pref: (1, 0, 0) | (0, 1, 0)
    npref: (0, 0, 1) | (1, 0, 0)

Acts list one lottery per state separated by ";", e.g. ``(1, 0); (0, 1)``.

System::

    dim 2
    system
    1 0 GE
    0 1 GT
    1 -1 EQ

(c) conecalc developers, MIT
'''

import os
import re

from .cone import ConeH
from .cone import ConeV
from .cone import OpenConeH
from .cone import UnionConeV
from .decision import Act
from .decision import Lottery
from .decision import PreferenceData
from .family import RepFamily
from .feasibility import LinIneqSystem
from .feasibility import RELATIONS
from .linalg import ParseError
from .linalg import format_rational
from .linalg import format_vector
from .linalg import parse_vector
from .linalg import vector


def strip(text):
    r'''
Split in lines, remove comments and blank lines.

:return: List of ``(lineno, line)``.
    '''

    ret = []

    for i, line in enumerate(text.splitlines()):
        line = line.split('#')[0].strip()
        if len(line) > 0:
            ret.append((i + 1, line))

    return ret


class _Reader:

    def __init__(self, text):
        self.lines = strip(text)
        self.index = 0

    def more(self):
        return self.index < len(self.lines)

    def next(self, what):
        if not self.more():
            raise ParseError('Unexpected end of file, expected {0:s}'.format(what))
        self.index += 1
        return self.lines[self.index - 1]

    def keyword(self, key, nargs=1, minimum=1):
        lineno, line = self.next('"{0:s}"'.format(key))
        items = line.split()
        if items[0] != key or len(items) != nargs + 1:
            raise ParseError('Line {0:d}: expected "{1:s}" with {2:d} argument(s), found "{3:s}"'.format(
                lineno, key, nargs, line))
        return [self.integer(i, lineno, minimum) for i in items[1:]]

    def integer(self, text, lineno, minimum=1):
        if not re.match(r'^[0-9]+$', text) or int(text) < minimum:
            what = 'a positive integer' if minimum > 0 else 'a nonnegative integer'
            raise ParseError('Line {0:d}: expected {1:s}, found "{2:s}"'.format(lineno, what, text))
        return int(text)

    def vector(self, dim):
        lineno, line = self.next('a vector')
        x = parse_vector(line)
        if len(x) != dim:
            raise ParseError('Line {0:d}: expected {1:d} coordinates, found {2:d}'.format(lineno, dim, len(x)))
        return x

    def vectors(self, dim, count=None):
        ret = []
        while self.more() and (count is None or len(ret) < count):
            ret.append(self.vector(dim))
        if count is not None and len(ret) != count:
            raise ParseError('Expected {0:d} vectors, found {1:d}'.format(count, len(ret)))
        return ret

    def done(self):
        if self.more():
            lineno, line = self.lines[self.index]
            raise ParseError('Line {0:d}: unexpected "{1:s}"'.format(lineno, line))


def _line(x):
    return ' '.join(format_rational(i) for i in x)


def parse_cone(text):
    r'''
Parse a cone file.

:rtype: ConeV, ConeH, OpenConeH, UnionConeV
    '''

    reader = _Reader(text)
    dim = reader.keyword('dim')[0]
    lineno, line = reader.next('"vrep", "hrep", "open", or "union K"')
    items = line.split()

    if items == ['vrep']:
        return ConeV(dim, reader.vectors(dim))

    if items == ['hrep']:
        return ConeH(dim, reader.vectors(dim))

    if items == ['open']:
        return OpenConeH(dim, reader.vectors(dim))

    if items[0] == 'union' and len(items) == 2:
        parts = []
        for i in range(reader.integer(items[1], lineno)):
            m = reader.keyword('part', minimum=0)[0]
            parts.append(ConeV(dim, reader.vectors(dim, m)))
        reader.done()
        return UnionConeV(dim, parts)

    raise ParseError('Line {0:d}: unknown representation "{1:s}"'.format(lineno, line))


def format_cone(C):
    r'''
Text representation of a cone (inverse of :py:func:`parse_cone`).
    '''

    ret = ['dim {0:d}'.format(C.dim)]

    if isinstance(C, ConeV):
        ret += ['vrep'] + [_line(g) for g in C.generators]
    elif isinstance(C, ConeH):
        ret += ['hrep'] + [_line(n) for n in C.normals]
    elif isinstance(C, OpenConeH):
        ret += ['open'] + [_line(n) for n in C.normals]
    else:
        ret += ['union {0:d}'.format(len(C.parts))]
        for part in C.parts:
            ret += ['part {0:d}'.format(len(part.generators))] + [_line(g) for g in part.generators]

    return '\n'.join(ret) + '\n'


def parse_family(text):
    r'''
Parse a family file.

:rtype: RepFamily
    '''

    reader = _Reader(text)
    dim = reader.keyword('dim')[0]
    lineno, line = reader.next('"family M" or "wholespace"')

    if line == 'wholespace':
        reader.done()
        return RepFamily(dim, (), whole_space=True)

    items = line.split()

    if items[0] != 'family' or len(items) != 2:
        raise ParseError('Line {0:d}: expected "family M" or "wholespace", found "{1:s}"'.format(lineno, line))

    sets = []

    for i in range(reader.integer(items[1], lineno)):
        s = reader.keyword('set', minimum=0)[0]
        sets.append(tuple(reader.vectors(dim, s)))

    reader.done()

    return RepFamily(dim, tuple(sets))


def format_family(F):
    r'''
Text representation of a family (inverse of :py:func:`parse_family`).
    '''

    ret = ['dim {0:d}'.format(F.dim)]

    if F.whole_space:
        return '\n'.join(ret + ['wholespace']) + '\n'

    ret += ['family {0:d}'.format(len(F.sets))]

    for K in F.sets:
        ret += ['set {0:d}'.format(len(K))] + [_line(y) for y in K]

    return '\n'.join(ret) + '\n'


def parse_object(text, ground):
    r'''
Parse a lottery ``"(1/2, 1/2)"`` or an act ``"(1, 0); (0, 1)"``.
    '''

    if ground[0] == 'lotteries':
        return Lottery(ground[1], parse_vector(text))

    rows = [parse_vector(row) for row in text.split(';')]

    return Act(ground[1], ground[2], tuple(Lottery(ground[2], row) for row in rows))


def format_object(obj):

    if isinstance(obj, Lottery):
        return format_vector(obj.probs)

    return '; '.join(format_vector(row.probs) for row in obj.rows)


def parse_relation(text):
    r'''
Parse a relation file.

:rtype: PreferenceData
    '''

    reader = _Reader(text)
    lineno, line = reader.next('"lotteries m" or "acts omega m"')
    items = line.split()

    if items[0] == 'lotteries' and len(items) == 2:
        ground = ('lotteries', reader.integer(items[1], lineno))
    elif items[0] == 'acts' and len(items) == 3:
        ground = ('acts', reader.integer(items[1], lineno), reader.integer(items[2], lineno))
    else:
        raise ParseError('Line {0:d}: expected "lotteries m" or "acts omega m", found "{1:s}"'.format(lineno, line))

    asserted = []
    denied = []

    while reader.more():

        lineno, line = reader.next('a pair')
        key, sep, rest = line.partition(':')
        pair = rest.split('|')

        if sep != ':' or key.strip() not in ['pref', 'npref'] or len(pair) != 2:
            raise ParseError('Line {0:d}: expected "pref: a | b" or "npref: a | b", found "{1:s}"'.format(
                lineno, line))

        pair = tuple(parse_object(i, ground) for i in pair)

        if key.strip() == 'pref':
            asserted.append(pair)
        else:
            denied.append(pair)

    return PreferenceData(ground, tuple(asserted), tuple(denied))


def format_relation(P):
    r'''
Text representation of a relation (inverse of :py:func:`parse_relation`).
    '''

    ret = [' '.join([P.ground[0]] + [str(i) for i in P.ground[1:]])]
    ret += ['pref: {0:s} | {1:s}'.format(format_object(a), format_object(b)) for a, b in P.asserted]
    ret += ['npref: {0:s} | {1:s}'.format(format_object(a), format_object(b)) for a, b in P.denied]

    return '\n'.join(ret) + '\n'


def parse_system(text):
    r'''
Parse a system file.

:rtype: LinIneqSystem
    '''

    reader = _Reader(text)
    dim = reader.keyword('dim')[0]
    lineno, line = reader.next('"system"')

    if line != 'system':
        raise ParseError('Line {0:d}: expected "system", found "{1:s}"'.format(lineno, line))

    rows = []

    while reader.more():
        lineno, line = reader.next('a row')
        items = line.split()
        if items[-1] not in RELATIONS:
            raise ParseError('Line {0:d}: row must end with GE, GT, or EQ'.format(lineno))
        x = parse_vector(' '.join(items[:-1]))
        if len(x) != dim:
            raise ParseError('Line {0:d}: expected {1:d} coordinates, found {2:d}'.format(lineno, dim, len(x)))
        rows.append((x, items[-1]))

    return LinIneqSystem(dim, tuple(rows))


def format_system(sys):
    r'''
Text representation of a system (inverse of :py:func:`parse_system`).
    '''

    ret = ['dim {0:d}'.format(sys.dim), 'system']
    ret += [_line(n) + ' ' + r for n, r in sys.rows]

    return '\n'.join(ret) + '\n'


def read(filename, parser=parse_cone):
    r'''
Read and parse an instance file.

:param str filename: The file.
:param function parser: E.g. :py:func:`parse_cone`, :py:func:`parse_family`.
    '''

    if not os.path.isfile(filename):
        raise ParseError('"{0:s}" does not exist'.format(filename))

    with open(filename, 'r') as file:
        return parser(file.read())


def vector_argument(arg):
    r'''
Vector given on the command line: a file holding one vector, or inline, e.g. ``"(1,0,0)"``.
    '''

    if os.path.isfile(arg):
        with open(arg, 'r') as file:
            lines = strip(file.read())
        if len(lines) != 1:
            raise ParseError('"{0:s}" must contain exactly one vector'.format(arg))
        return vector(parse_vector(lines[0][1]))

    return vector(parse_vector(arg))
