r'''
Exact rational vectors, the duality pairing, and small linear-algebra kernels.

Scalars are :py:class:`fractions.Fraction`, vectors are tuples of scalars.
Nothing in this package uses floating point.

(c) conecalc developers, MIT
'''

from fractions import Fraction
import functools
import math
import re


class UsageError(ValueError):
    r'''
A precondition or hypothesis of an operation is violated.
    '''
    pass


class ParseError(IOError):
    r'''
Malformed instance file, vector, or rational.
    '''
    pass


_rational = re.compile(r'^([+-]?[0-9]+)(/([0-9]+))?$')


def rational(value):
    r'''
Convert to an exact rational.

:type value: str, int, Fraction
:param value:
    A number. Text must read: optional sign, integer, optionally "/" and a positive integer.
    E.g. ``"-3/7"`` or ``"2"``.

:rtype: Fraction
    '''

    if isinstance(value, Fraction):
        return value

    if isinstance(value, int):
        return Fraction(value)

    if not isinstance(value, str):
        raise ParseError('Not a rational: "{0:s}"'.format(str(value)))

    match = _rational.match(value.strip())

    if not match:
        raise ParseError('Not a rational: "{0:s}"'.format(value))

    if match.group(3) is not None and int(match.group(3)) == 0:
        raise ParseError('Zero denominator: "{0:s}"'.format(value))

    return Fraction(int(match.group(1)), int(match.group(3) or 1))


def vector(coords):
    r'''
Return a vector (tuple of Fraction).

:param list coords: Coordinates (anything accepted by :py:func:`rational`).
:rtype: tuple
    '''

    ret = tuple(rational(c) for c in coords)

    if len(ret) == 0:
        raise UsageError('A vector needs at least one coordinate')

    return ret


def parse_vector(text):
    r'''
Parse a vector written as ``"(1, -1/2, 3)"`` or ``"1 -1/2 3"``.
    '''

    text = text.strip()

    if text.startswith('('):
        if not text.endswith(')'):
            raise ParseError('Unbalanced parenthesis: "{0:s}"'.format(text))
        text = text[1:-1]

    items = list(filter(None, re.split(r'[\s,]+', text)))

    if len(items) == 0:
        raise ParseError('Empty vector')

    return tuple(rational(i) for i in items)


def format_rational(value):
    r'''
Rational text syntax: ``"-3/7"``, ``"2"``.
    '''
    return str(Fraction(value))


def format_vector(x):
    r'''
Vector text syntax: ``"(1, -1/2)"``.
    '''
    return '(' + ', '.join(format_rational(i) for i in x) + ')'


def check_dim(vectors, dim=None):
    r'''
Check that all vectors share one dimension and return it.

:param list vectors: List of vectors.
:param int dim: Dimension to enforce (optional if ``vectors`` is nonempty).
:return: The dimension.
:throw: UsageError
    '''

    for x in vectors:
        if dim is None:
            dim = len(x)
        if len(x) != dim:
            raise UsageError('Dimension mismatch: {0:d} != {1:d}'.format(len(x), dim))

    if dim is None:
        raise UsageError('Dimension cannot be inferred from an empty list')

    return dim


def pairing(x, y):
    r'''
The duality map :math:`\langle x, y \rangle = \sum_i x_i y_i`, exactly.
    '''

    if len(x) != len(y):
        raise UsageError('Dimension mismatch: {0:d} != {1:d}'.format(len(x), len(y)))

    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def zero(dim):
    return tuple(Fraction(0) for i in range(dim))


def unit(dim, i):
    return tuple(Fraction(1 if j == i else 0) for j in range(dim))


def is_zero(x):
    return all(i == 0 for i in x)


def add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def scale(x, s):
    return tuple(a * s for a in x)


def neg(x):
    return tuple(-a for a in x)


def primitive(x):
    r'''
Rescale by a positive rational to integer coordinates with gcd 1.
The direction is kept: only positive scaling is quotiented out.

:return: The primitive vector (the zero vector is returned unchanged).
    '''

    if is_zero(x):
        return tuple(Fraction(i) for i in x)

    den = functools.reduce(lambda a, b: a * b // math.gcd(a, b), [Fraction(i).denominator for i in x])
    ints = [int(Fraction(i) * den) for i in x]
    g = functools.reduce(math.gcd, [abs(i) for i in ints if i != 0])

    return tuple(Fraction(i // g) for i in ints)


def proportional(x, y):
    r'''
Check if ``y`` is a positive multiple of ``x`` (both nonzero).
    '''
    return primitive(x) == primitive(y)


def row_echelon(rows, ncols):
    r'''
Reduced row echelon form.

:param list rows: Rows of the matrix.
:param int ncols: Number of columns.
:return: ``(rref, pivots)``: the nonzero rows of the reduced form and their pivot columns.
    '''

    m = [list(Fraction(i) for i in row) for row in rows]
    pivots = []
    r = 0

    for c in range(ncols):

        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)

        if p is None:
            continue

        m[r], m[p] = m[p], m[r]
        s = m[r][c]
        m[r] = [i / s for i in m[r]]

        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]

        pivots.append(c)
        r += 1

        if r == len(m):
            break

    return [tuple(row) for row in m[:r]], pivots


def rank(vectors, dim=None):
    r'''
Exact rank over the rationals.

:param list vectors: List of vectors (empty list: rank 0).
    '''

    if len(vectors) == 0:
        return 0

    dim = check_dim(vectors, dim)

    return len(row_echelon(vectors, dim)[1])


def nullspace(rows, dim):
    r'''
Basis of :math:`\{y : \langle r, y \rangle = 0 \; \forall r \in \mathrm{rows}\}`.

:param list rows: Normal vectors.
:param int dim: Ambient dimension.
:return: List of basis vectors (empty if only the zero vector solves the system).
    '''

    check_dim(rows, dim)
    rref, pivots = row_echelon(rows, dim)
    free = [c for c in range(dim) if c not in pivots]
    ret = []

    for f in free:
        y = [Fraction(0)] * dim
        y[f] = Fraction(1)
        for row, p in zip(rref, pivots):
            y[p] = -row[f]
        ret.append(tuple(y))

    return ret


def solve(rows, rhs, dim):
    r'''
Solve :math:`\langle r_i, y \rangle = c_i` for all ``i`` by exact elimination.

:param list rows: Coefficient vectors.
:param list rhs: Right-hand sides.
:param int dim: Number of unknowns.
:return: A solution (free unknowns set to zero), or ``None`` if the system is inconsistent.
    '''

    check_dim(rows, dim)
    aug = [tuple(row) + (Fraction(c),) for row, c in zip(rows, rhs)]
    rref, pivots = row_echelon(aug, dim + 1)

    if dim in pivots:
        return None

    y = [Fraction(0)] * dim

    for row, p in zip(rref, pivots):
        y[p] = row[dim]

    return tuple(y)


def solve_prescribed_values(targets, dim=None):
    r'''
Find a dual vector with prescribed pairings.

:param list targets: List of ``(v, c)``: the prescription :math:`\langle v, y \rangle = c`.
:param int dim: Dimension (required only if ``targets`` is empty).

:return:
    A vector ``y`` with ``pairing(v, y) == c`` for every target,
    or ``None`` if the prescriptions are linearly inconsistent.
    '''

    vectors = [v for v, c in targets]
    dim = check_dim(vectors, dim)

    return solve(vectors, [rational(c) for v, c in targets], dim)


def project_out(x, basis):
    r'''
Orthogonal projection of ``x`` onto the complement of ``span(basis)``.
    '''

    if len(basis) == 0:
        return tuple(x)

    gram = [tuple(pairing(a, b) for b in basis) for a in basis]
    coef = solve(gram, [pairing(a, x) for a in basis], len(basis))

    for c, b in zip(coef, basis):
        x = sub(x, scale(b, c))

    return tuple(x)


def lex_sorted(vectors):
    r'''
Deduplicate and sort lexicographically.
    '''
    return tuple(sorted(set(tuple(v) for v in vectors)))
