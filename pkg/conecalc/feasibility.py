r'''
Feasibility of homogeneous linear systems mixing strict and non-strict inequalities.

A system is a list of rows ``(normal, relation)`` read as
:math:`\langle \mathrm{normal}, y \rangle \bowtie 0` with :math:`\bowtie \in \{\ge, >, =\}`.
Equalities are removed by restricting to their null space,
the remaining inequalities are decided by Fourier-Motzkin elimination carrying strictness flags.
A satisfying vector is reconstructed by back-substitution.

(c) conecalc developers, MIT
'''

from dataclasses import dataclass
from fractions import Fraction

from .linalg import UsageError
from .linalg import check_dim
from .linalg import format_vector
from .linalg import is_zero
from .linalg import neg
from .linalg import nullspace
from .linalg import pairing
from .linalg import primitive
from .linalg import scale
from .linalg import vector
from .linalg import zero

GE = 'GE'
GT = 'GT'
EQ = 'EQ'

RELATIONS = (GE, GT, EQ)


@dataclass(frozen=True)
class LinIneqSystem:
    r'''
Homogeneous system :math:`\langle n_i, y \rangle \bowtie_i 0`.

:param int dim: Number of unknowns.
:param tuple rows: Tuple of ``(normal, relation)``, relation in ``GE``, ``GT``, ``EQ``.
    '''

    dim: int
    rows: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise UsageError('System dimension must be positive')
        for normal, relation in self.rows:
            if relation not in RELATIONS:
                raise UsageError('Unknown relation "{0:s}"'.format(str(relation)))
        check_dim([normal for normal, relation in self.rows], self.dim)


def system(dim, rows):
    r'''
Construct a :py:class:`LinIneqSystem` from any vector-like normals.
    '''
    return LinIneqSystem(dim, tuple((vector(n), r) for n, r in rows))


def satisfies(sys, y):
    r'''
Check (exactly) if ``y`` satisfies every row of ``sys``.
    '''

    for normal, relation in sys.rows:
        value = pairing(normal, y)
        if relation == GE and value < 0:
            return False
        if relation == GT and value <= 0:
            return False
        if relation == EQ and value != 0:
            return False

    return True


def _prune(rows, eliminated=0):
    r'''
Remove trivial and redundant rows ``(normal, strict, history)``.

*   A row ``0 >= 0`` is dropped, a row ``0 > 0`` makes the system infeasible.
*   A row combining more than ``eliminated + 1`` original rows is redundant (Chernikov).
*   A row is dropped if another row with the same normal (up to positive scaling)
    is at least as strict and combines a subset of its original rows.

:return: The pruned rows, or ``None`` if a row reads "0 > 0".
    '''

    kept = {}

    for normal, strict, history in rows:
        if is_zero(normal):
            if strict:
                return None
            continue
        if len(history) > eliminated + 1:
            continue
        key = primitive(normal)
        same = kept.setdefault(key, [])
        if any((s or not strict) and h <= history for s, h in same):
            continue
        same[:] = [(s, h) for s, h in same if not ((strict or not s) and history <= h)]
        same.append((strict, history))

    return [(key, s, h) for key, same in kept.items() for s, h in same]


def _eliminate(rows, k):
    r'''
One Fourier-Motzkin step: eliminate unknown ``k``.
    '''

    pos = [r for r in rows if r[0][k] > 0]
    neg_ = [r for r in rows if r[0][k] < 0]
    ret = [r for r in rows if r[0][k] == 0]

    for p, ps, ph in pos:
        for q, qs, qh in neg_:
            normal = tuple(-q[k] * a + p[k] * b for a, b in zip(p, q))
            ret.append((normal, ps or qs, ph | qh))

    return ret


def _pick(lower, upper):
    r'''
Pick a value in the interval described by bounds ``(value, strict)``.
    '''

    lo = max(lower, key=lambda b: (b[0], b[1])) if lower else None
    up = min(upper, key=lambda b: (b[0], not b[1])) if upper else None

    if lo is None and up is None:
        return Fraction(0)
    if up is None:
        return lo[0] + 1 if lo[1] else lo[0]
    if lo is None:
        return up[0] - 1 if up[1] else up[0]
    if lo[0] == up[0]:
        return lo[0]

    return (lo[0] + up[0]) / 2


def _pick_var(rows, remaining):
    r'''
Unknown whose elimination creates the fewest rows: minimal ``#positive * #negative`` coefficients.
    '''

    def cost(k):
        pos = sum(1 for r in rows if r[0][k] > 0)
        neg_ = sum(1 for r in rows if r[0][k] < 0)
        return (pos * neg_, k)

    return min(remaining, key=cost)


def _solve_inequalities(rows, dim):
    r'''
Fourier-Motzkin on rows ``(normal, strict)`` meaning :math:`\langle n, y \rangle \ge 0` or ``> 0``.

:return: A witness, or ``None``.
    '''

    stages = []
    remaining = list(range(dim))
    rows = _prune([(n, s, frozenset([i])) for i, (n, s) in enumerate(rows)])

    while remaining:
        if rows is None:
            return None
        k = _pick_var(rows, remaining)
        remaining.remove(k)
        stages.append((k, rows))
        rows = _prune(_eliminate(rows, k), len(stages))

    if rows is None:
        return None

    # unknowns eliminated before a stage have zero coefficients in its rows

    y = [Fraction(0)] * dim

    for k, stage in reversed(stages):
        lower = []
        upper = []
        for normal, strict, history in stage:
            if normal[k] == 0:
                continue
            rest = sum((normal[i] * y[i] for i in range(dim) if i != k), Fraction(0))
            bound = -rest / normal[k]
            if normal[k] > 0:
                lower.append((bound, strict))
            else:
                upper.append((bound, strict))
        y[k] = _pick(lower, upper)

    return tuple(y)


def feasible(sys):
    r'''
Decide satisfiability of a homogeneous mixed system.

:param LinIneqSystem sys: The system.

:return:
    A witness ``y`` satisfying every row exactly (strict rows strictly), or ``None`` if infeasible.
    The zero vector is returned if and only if the system has no strict rows.
    '''

    if not any(relation == GT for normal, relation in sys.rows):
        return zero(sys.dim)

    # parametrise the solution space of the equalities: y = B z

    basis = nullspace([n for n, r in sys.rows if r == EQ], sys.dim)

    if len(basis) == 0:
        return None

    rows = [(tuple(pairing(b, n) for b in basis), r == GT) for n, r in sys.rows if r != EQ]
    z = _solve_inequalities(rows, len(basis))

    if z is None:
        return None

    y = zero(sys.dim)

    for c, b in zip(z, basis):
        y = tuple(a + c * i for a, i in zip(y, b))

    if not satisfies(sys, y):
        raise RuntimeError('Internal error: witness does not satisfy the system')

    return y


def strong_separate(C, x0):
    r'''
Strongly separate a finitely generated cone and a point outside it.

:type C: ConeV or list
:param C: The cone :math:`C` (or its list of generators).

:param tuple x0: Point not in :math:`C`.

:return:
    ``y`` with :math:`\langle g, y \rangle \ge 0` for every generator
    and :math:`\langle x_0, y \rangle = -1`.

:throw: UsageError if ``x0`` belongs to the cone (then no such ``y`` exists).
    '''

    generators = list(getattr(C, 'generators', C))
    dim = check_dim(generators + [x0], getattr(C, 'dim', None))
    rows = [(g, GE) for g in generators] + [(neg(x0), GT)]
    y = feasible(LinIneqSystem(dim, tuple(rows)))

    if y is None:
        raise UsageError('hypothesis violated: point {0:s} belongs to the cone, nothing to separate'.format(
            format_vector(x0)))

    return scale(y, Fraction(1) / -pairing(x0, y))
