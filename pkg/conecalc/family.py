r'''
Representation families.

A family :math:`\mathcal{K}` of finite sets of dual vectors represents the cone

.. math::

    C_\mathcal{K} = \{x : \forall K \in \mathcal{K}, \exists y \in K, \langle x, y \rangle \ge 0\}.

The whole space is represented by the convention family (``whole_space=True``).
The (infinite) family :math:`\{G_x : x \notin C\}` is never built:
operations quantifying over it take explicit lists of non-members.

(c) conecalc developers, MIT
'''

from dataclasses import dataclass

from .cone import ConeV
from .cone import canonical
from .cone import dual_cone
from .feasibility import GE
from .feasibility import GT
from .feasibility import LinIneqSystem
from .feasibility import feasible
from .linalg import UsageError
from .linalg import check_dim
from .linalg import format_vector
from .linalg import is_zero
from .linalg import neg
from .linalg import pairing
from .linalg import vector


@dataclass(frozen=True)
class RepFamily:
    r'''
Representation family.

:param int dim: Dimension.
:param tuple sets: Tuple of nonempty tuples of vectors.
:param bool whole_space:
    Convention family of the whole space (``sets`` is then empty).
    An empty family, or a family whose only sets are empty, is read as this convention.
    '''

    dim: int
    sets: tuple = ()
    whole_space: bool = False

    def __post_init__(self):

        if self.dim < 1:
            raise UsageError('Family dimension must be positive')

        sets = tuple(tuple(vector(y) for y in K) for K in self.sets)
        empty = [len(K) == 0 for K in sets]

        for K in sets:
            check_dim(K, self.dim)

        if self.whole_space and any(len(K) > 0 for K in sets):
            raise UsageError('The whole-space family has no sets')

        if any(empty) and not all(empty):
            raise UsageError('An empty set can only appear in the whole-space family')

        if all(empty):
            object.__setattr__(self, 'whole_space', True)
            sets = ()

        object.__setattr__(self, 'sets', sets)


@dataclass(frozen=True)
class GxCone:
    r'''
The open dual halfspace-cone :math:`G_x = \{y : \langle x, y \rangle < 0\}`.
    '''

    x: tuple

    def __post_init__(self):
        x = vector(self.x)
        if is_zero(x):
            raise UsageError('G_x needs a nonzero x')
        object.__setattr__(self, 'x', x)

    def contains(self, y):
        return pairing(self.x, y) < 0

    def includes(self, K):
        r'''
Check if every element of ``K`` belongs to :math:`G_x`.
        '''
        return subset_of_Gx(K, self.x)


def family_member(F, x):
    r'''
Check if ``x`` belongs to the cone represented by ``F``.
    '''

    if len(x) != F.dim:
        raise UsageError('Dimension mismatch: {0:d} != {1:d}'.format(len(x), F.dim))

    if F.whole_space:
        return True

    return all(any(pairing(x, y) >= 0 for y in K) for K in F.sets)


def is_trivial(K):
    r'''
Check if a set excludes no point: :math:`\{x : \forall y \in K, \langle x, y \rangle < 0\} = \emptyset`.

:param list K: Nonempty list of vectors.
:return: ``(True, None)``, or ``(False, x)`` with :math:`\langle x, y \rangle < 0` for all ``y`` in ``K``.
    '''

    if len(K) == 0:
        raise UsageError('A trivial-set test needs a nonempty set')

    dim = check_dim(K)
    x = feasible(LinIneqSystem(dim, tuple((neg(vector(y)), GT) for y in K)))

    if x is None:
        return (True, None)

    return (False, x)


def subset_of_Gx(K, x):
    r'''
Check if :math:`K \subseteq G_x`.
    '''

    check_dim(list(K) + [x])

    return all(pairing(x, y) < 0 for y in K)


def hat_member(F, x):
    r'''
Check if :math:`G_x` belongs to the hat of the family (some set of ``F`` lies in :math:`G_x`).
    '''
    return any(subset_of_Gx(K, x) for K in F.sets)


def hat_equal_on_sample(F1, F2, sample):
    r'''
Compare the hats of two families pointwise over a sample of nonzero vectors.

:return: ``(True, None)`` or ``(False, x)`` with ``x`` the first point on which they differ.
    '''

    if F1.dim != F2.dim:
        raise UsageError('Dimension mismatch: {0:d} != {1:d}'.format(F1.dim, F2.dim))

    for x in sample:
        if is_zero(x):
            raise UsageError('Sample vectors must be nonzero')
        if hat_member(F1, x) != hat_member(F2, x):
            return (False, tuple(x))

    return (True, None)


def normalize_family(F):
    r'''
Drop trivial sets and replace every other set by the extreme rays of its conic hull.
The represented cone does not change.
    '''

    if F.whole_space:
        return F

    sets = []

    for K in F.sets:
        if is_trivial(K)[0]:
            continue
        sets.append(canonical(ConeV(F.dim, K)).generators)

    if len(sets) == 0:
        return RepFamily(F.dim, (), whole_space=True)

    return RepFamily(F.dim, tuple(sorted(set(sets))))


def kc_membership_test(member, x, nonmembers):
    r'''
Evaluate :math:`\forall x_0 \in \mathrm{nonmembers}, \exists y \in G_{x_0}: \langle x, y \rangle \ge 0`.

:param function member: Membership oracle of the cone.
:param tuple x: Point to test.
:param list nonmembers: Points certified not to be in the cone.
:throw: UsageError if the oracle reports a listed non-member inside the cone.
    '''

    for x0 in nonmembers:

        if member(x0):
            raise UsageError('oracle contradiction: {0:s} belongs to the cone'.format(format_vector(x0)))

        dim = check_dim([x, x0])
        sys = LinIneqSystem(dim, ((neg(vector(x0)), GT), (vector(x), GE)))

        if feasible(sys) is None:
            return False

    return True


def dual_singletons(C):
    r'''
Family :math:`\{\{y\} : y \text{ generator of } C'\}` representing the closed convex cone ``C``.
    '''

    gens = dual_cone(C).generators

    if len(gens) == 0:
        return RepFamily(C.dim, (), whole_space=True)

    return RepFamily(C.dim, tuple((y, ) for y in gens))


def family_from_open_cones(cones):
    r'''
Family :math:`\{-N_j\}` with :math:`N_j` the normals of open cones covering a complement.
    '''

    if len(cones) == 0:
        raise UsageError('At least one open cone is needed')

    dim = cones[0].dim

    return RepFamily(dim, tuple(tuple(neg(n) for n in U.normals) for U in cones))
