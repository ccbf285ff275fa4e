r'''
Brute-force grid oracle.

Every defining predicate is evaluated by enumeration over a rational grid
and compared with the fast exact procedures.
Membership in a finitely generated cone is decided from the definition
(Caratheodory: some linearly independent subset of generators has nonnegative coefficients),
independently of the double description and the feasibility solver.

(c) conecalc developers, MIT
'''

from dataclasses import dataclass
from fractions import Fraction
import itertools

import numpy as np
import tqdm

from .cone import ConeH
from .cone import ConeV
from .cone import member_v
from .cone import to_vrep
from .decision import in_aumann_cone
from .decision import aumann_cone
from .family import dual_singletons
from .family import family_member
from .family import is_trivial
from .feasibility import feasible
from .feasibility import satisfies
from .linalg import UsageError
from .linalg import format_vector
from .linalg import is_zero
from .linalg import pairing
from .linalg import rank
from .linalg import solve

TASKS = ['membership', 'triviality', 'feasibility', 'family-membership', 'implied']


@dataclass(frozen=True)
class GridSpec:
    r'''
Grid of vectors with coordinates :math:`k / q`, ``q`` in ``denominators``,
bounded by :math:`|k / q| \le` ``numerator_bound`` (duplicate values merged).
    '''

    dim: int
    numerator_bound: int = 4
    denominators: tuple = (1, 2, 3)

    def __post_init__(self):
        if self.dim < 1 or self.numerator_bound < 1:
            raise UsageError('Grid dimension and numerator bound must be positive')
        if len(self.denominators) == 0 or any(q < 1 for q in self.denominators):
            raise UsageError('Grid denominators must be positive')
        object.__setattr__(self, 'denominators', tuple(self.denominators))

    def values(self):
        r'''
Sorted coordinate values.
        '''

        N = self.numerator_bound
        ret = set()

        for q in self.denominators:
            for k in range(-N * q, N * q + 1):
                ret.add(Fraction(k, q))

        return sorted(ret)

    def points(self):
        r'''
All grid vectors (lexicographic order).
        '''
        return [tuple(x) for x in itertools.product(self.values(), repeat=self.dim)]

    def __len__(self):
        return len(self.values()) ** self.dim


def in_cone_by_definition(generators, x):
    r'''
Decide :math:`x \in \mathrm{cone}(G)` by enumerating linearly independent subsets of ``G``.
    '''

    if is_zero(x):
        return True

    dim = len(x)

    for r in range(1, min(len(generators), dim) + 1):
        for S in itertools.combinations(generators, r):
            if rank(list(S), dim) < r:
                continue
            lam = solve([tuple(s[j] for s in S) for j in range(dim)], x, r)
            if lam is not None and all(l >= 0 for l in lam):
                return True

    return False


def _on_ray_by_definition(rays, x):
    for r in rays:
        i = next(i for i in range(len(r)) if r[i] != 0)
        t = x[i] / r[i]
        if t > 0 and all(a == t * b for a, b in zip(x, r)):
            return True
    return is_zero(x)


def _compare(task, points, fast, oracle, quiet):

    n = len(points)
    f = np.zeros(n, dtype=bool)
    o = np.zeros(n, dtype=bool)

    for i in tqdm.trange(n, disable=quiet, desc=task):
        f[i] = fast(points[i])
        o[i] = oracle(points[i])

    bad = np.argwhere(f != o).ravel()
    report = {
        'task': task,
        'points': n,
        'disagreements': [format_vector(points[i]) for i in bad],
    }

    if len(bad) == 0:
        report['message'] = 'agree on {0:d} points'.format(n)
    else:
        report['message'] = 'disagree on {0:d} of {1:d} points, first: {2:s}'.format(
            len(bad), n, report['disagreements'][0])

    return report


def _membership(instance, grid, quiet):

    C = to_vrep(instance) if isinstance(instance, ConeH) else instance

    if not isinstance(C, ConeV):
        raise UsageError('membership needs a closed convex cone (vrep or hrep)')

    return _compare(
        'membership', grid.points(),
        lambda x: member_v(C, x),
        lambda x: in_cone_by_definition(C.generators, x),
        quiet)


def _triviality(instance, grid, quiet):

    K = list(getattr(instance, 'generators', instance))

    if len(K) == 0:
        K = [tuple(Fraction(0) for i in range(grid.dim))]

    trivial, witness = is_trivial(K)
    points = grid.points()
    excluded = np.zeros(len(points), dtype=bool)

    for i in tqdm.trange(len(points), disable=quiet, desc='triviality'):
        excluded[i] = all(pairing(points[i], y) < 0 for y in K)

    report = {'task': 'triviality', 'points': len(points), 'trivial': trivial}

    if trivial:
        bad = np.argwhere(excluded).ravel()
        report['disagreements'] = [format_vector(points[i]) for i in bad]
        if len(bad) == 0:
            report['message'] = 'necessary-direction pass: all {0:d} points satisfied'.format(len(points))
        else:
            report['message'] = 'necessary-direction failure: {0:s} is excluded'.format(report['disagreements'][0])
        return report

    ok = all(pairing(witness, y) < 0 for y in K)
    report['disagreements'] = [] if ok else [format_vector(witness)]
    report['message'] = 'not trivial: witness {0:s} {1:s}; {2:d} of {3:d} points excluded'.format(
        format_vector(witness), 'verified' if ok else 'FAILED', int(np.sum(excluded)), len(points))

    return report


def _feasibility(instance, grid, quiet):

    sys = instance
    points = grid.points()
    hits = np.zeros(len(points), dtype=bool)

    for i in tqdm.trange(len(points), disable=quiet, desc='feasibility'):
        hits[i] = satisfies(sys, points[i])

    w = feasible(sys)
    report = {'task': 'feasibility', 'points': len(points), 'feasible': w is not None}

    if w is None:
        bad = np.argwhere(hits).ravel()
        report['disagreements'] = [format_vector(points[i]) for i in bad]
        if len(bad) == 0:
            report['message'] = 'necessary-direction pass: no point of {0:d} satisfies the system'.format(len(points))
        else:
            report['message'] = 'disagree: infeasible, but {0:s} satisfies the system'.format(
                report['disagreements'][0])
        return report

    ok = satisfies(sys, w)
    report['disagreements'] = [] if ok else [format_vector(w)]
    report['message'] = 'feasibility soundness: witness {0:s} {1:s}; {2:d} of {3:d} points satisfy the system'.format(
        format_vector(w), 'verified' if ok else 'FAILED', int(np.sum(hits)), len(points))

    return report


def _family_membership(instance, grid, quiet):

    F, C = instance

    if F is None:
        F = dual_singletons(C)

    return _compare(
        'family-membership', grid.points(),
        lambda x: family_member(F, x),
        lambda x: in_cone_by_definition(C.generators, x),
        quiet)


def _implied(instance, grid, quiet):

    P, A = instance
    rays = aumann_cone(P)
    m = P.ground[-1]
    points = [x for x in grid.points() if all(sum(x[i: i + m]) == 0 for i in range(0, len(x), m))]

    if A.transitivity:
        oracle = lambda x: in_cone_by_definition(rays, x)
    else:
        oracle = lambda x: _on_ray_by_definition(rays, x)

    return _compare('implied', points, lambda x: in_aumann_cone(rays, x, A.transitivity), oracle, quiet)


def oracle_compare(task, instance, grid, quiet=True):
    r'''
Compare a fast exact procedure with its brute-force definition over a grid.

:param str task: ``'membership'``, ``'triviality'``, ``'feasibility'``, ``'family-membership'``, ``'implied'``.

:param instance:
    *   membership: ConeV or ConeH.
    *   triviality: ConeV (its generators) or list of vectors.
    *   feasibility: LinIneqSystem.
    *   family-membership: ``(RepFamily or None, ConeV)`` (``None``: dual-generator singletons).
    *   implied: ``(PreferenceData, AxiomSet)``, compared on the grid of differences.

:param GridSpec grid: The grid.
:param bool quiet: Hide progress bar.

:return:
    Report: ``dict`` with (at least) ``'task'``, ``'points'``, ``'disagreements'``, ``'message'``.
    For triviality and infeasibility the grid check is necessary-direction only, as stated in the message.
    '''

    if task == 'membership':
        return _membership(instance, grid, quiet)
    if task == 'triviality':
        return _triviality(instance, grid, quiet)
    if task == 'feasibility':
        return _feasibility(instance, grid, quiet)
    if task == 'family-membership':
        return _family_membership(instance, grid, quiet)
    if task == 'implied':
        return _implied(instance, grid, quiet)

    raise UsageError('Unknown task "{0:s}", choose from: {1:s}'.format(task, ', '.join(TASKS)))
