r'''
Preferences over finite lotteries and Anscombe-Aumann acts, encoded as cones of differences.

A relation satisfying independence is determined by its Aumann cone
:math:`\{\alpha (a - b) : \alpha \ge 0, (a, b) \text{ asserted}\}`.
Without transitivity the cone is the union of the asserted rays,
with transitivity it is their conic hull.

(c) conecalc developers, MIT
'''

from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

from . import convert
from .cone import ConeH
from .cone import ConeV
from .cone import UnionConeV
from .cone import closed_cone_rep_2d
from .cone import lemma_witness
from .cone import member_v
from .cone import to_vrep
from .family import RepFamily
from .linalg import UsageError
from .linalg import format_vector
from .linalg import is_zero
from .linalg import lex_sorted
from .linalg import neg
from .linalg import pairing
from .linalg import primitive
from .linalg import proportional
from .linalg import rank
from .linalg import rational
from .linalg import solve_prescribed_values
from .linalg import sub
from .linalg import vector

YES = 'Yes'
NO = 'No'
UNDETERMINED = 'Undetermined'


class InconsistencyError(UsageError):
    r'''
A denied pair lies inside the cone implied by the asserted pairs.

:param AxiomSet axioms: The axioms under which the data is inconsistent.
:param tuple pair: The denied pair.
:param tuple difference: Its difference vector.
    '''

    def __init__(self, axioms, pair, difference):
        self.axioms = axioms
        self.pair = pair
        self.difference = difference
        super().__init__('inconsistent data under axioms {{{0:s}}}: denied difference {1:s} is implied'.format(
            ', '.join(axioms.names()), format_vector(difference)))


@dataclass(frozen=True)
class Lottery:
    r'''
Probability vector on ``m`` outcomes.
    '''

    m: int
    probs: tuple

    def __post_init__(self):
        probs = vector(self.probs)
        if len(probs) != self.m:
            raise UsageError('Lottery needs {0:d} probabilities, {1:d} given'.format(self.m, len(probs)))
        if any(p < 0 for p in probs):
            raise UsageError('Lottery {0:s} has a negative probability'.format(format_vector(probs)))
        if sum(probs) != 1:
            raise UsageError('Lottery {0:s} does not sum to 1'.format(format_vector(probs)))
        object.__setattr__(self, 'probs', probs)


@dataclass(frozen=True)
class Act:
    r'''
Lottery per state (``omega_count`` rows).
    '''

    omega_count: int
    m: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(r if isinstance(r, Lottery) else Lottery(self.m, r) for r in self.rows)
        if len(rows) != self.omega_count:
            raise UsageError('Act needs {0:d} states, {1:d} given'.format(self.omega_count, len(rows)))
        for r in rows:
            if r.m != self.m:
                raise UsageError('Act rows must be lotteries on {0:d} outcomes'.format(self.m))
        object.__setattr__(self, 'rows', rows)


@dataclass(frozen=True)
class AxiomSet:
    r'''
Axioms assumed on top of reflexivity and independence (always on).
Continuity is recorded but changes no verdict: finitely generated cones are closed.
    '''

    transitivity: bool = False
    continuity: bool = False

    @property
    def reflexivity(self):
        return True

    @property
    def independence(self):
        return True

    def names(self):
        ret = ['reflexivity', 'independence']
        if self.transitivity:
            ret.append('transitivity')
        if self.continuity:
            ret.append('continuity')
        return ret


@dataclass(frozen=True)
class PreferenceData:
    r'''
Finite preference data.

:param tuple ground: ``('lotteries', m)`` or ``('acts', omega_count, m)``.
:param tuple asserted: Pairs ``(a, b)`` meaning "a is weakly preferred to b".
:param tuple denied: Pairs ``(a, b)`` meaning "a is not weakly preferred to b".
    '''

    ground: tuple
    asserted: tuple = field(default_factory=tuple)
    denied: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.ground[0] not in ['lotteries', 'acts']:
            raise UsageError('Unknown ground "{0:s}"'.format(str(self.ground[0])))
        asserted = tuple((self.make(a), self.make(b)) for a, b in self.asserted)
        denied = tuple((self.make(a), self.make(b)) for a, b in self.denied)
        object.__setattr__(self, 'ground', tuple(self.ground))
        object.__setattr__(self, 'asserted', asserted)
        object.__setattr__(self, 'denied', denied)

    @property
    def dim(self):
        if self.ground[0] == 'lotteries':
            return self.ground[1]
        return self.ground[1] * self.ground[2]

    def make(self, obj):
        r'''
Convert to a :py:class:`Lottery` or :py:class:`Act` of this ground (checking the shape).
        '''

        if self.ground[0] == 'lotteries':
            if isinstance(obj, Lottery):
                if obj.m != self.ground[1]:
                    raise UsageError('Lottery on {0:d} outcomes expected'.format(self.ground[1]))
                return obj
            return Lottery(self.ground[1], obj)

        omega_count, m = self.ground[1:]

        if isinstance(obj, Act):
            if (obj.omega_count, obj.m) != (omega_count, m):
                raise UsageError('Act of shape ({0:d}, {1:d}) expected'.format(omega_count, m))
            return obj

        return Act(omega_count, m, obj)


@dataclass(frozen=True)
class Convex:
    r'''
Certificate: the union of asserted rays is already a convex cone.
    '''
    pass


@dataclass(frozen=True)
class CounterexampleTriple:
    r'''
Certificate that the union of asserted rays is not convex.

:param tuple a: An asserted ray.
:param tuple b: An asserted ray, not collinear with ``a``.
:param tuple coefficients: ``(k, l)``, positive integers.
:param tuple combination: :math:`c = k a + l b`, on no asserted ray.
:param tuple functionals:
    One pair ``(r, y)`` per asserted ray ``r``:
    :math:`\langle c, y \rangle < 0 \le \langle r, y \rangle`.
    '''

    a: tuple
    b: tuple
    coefficients: tuple
    combination: tuple
    functionals: tuple


def mix(alpha, a, c):
    r'''
Mixture :math:`\alpha a + (1 - \alpha) c` of two lotteries, :math:`\alpha \in [0, 1]`.
    '''

    alpha = rational(alpha)

    if alpha < 0 or alpha > 1:
        raise UsageError('Mixture weight must be in [0, 1]')

    return Lottery(a.m, tuple(alpha * i + (1 - alpha) * j for i, j in zip(a.probs, c.probs)))


def expectation(p, u):
    r'''
Expected utility :math:`E_p[u]`.
    '''
    return pairing(p.probs, vector(u))


def aa_vectorize(f, g):
    r'''
Flattened difference of two acts, row-major by state:
component :math:`\omega m + z` is :math:`f(\omega)_z - g(\omega)_z`.
    '''

    if (f.omega_count, f.m) != (g.omega_count, g.m):
        raise UsageError('Act shape mismatch: ({0:d}, {1:d}) != ({2:d}, {3:d})'.format(
            f.omega_count, f.m, g.omega_count, g.m))

    return tuple(convert.flatten([sub(a.probs, b.probs) for a, b in zip(f.rows, g.rows)]))


def difference(a, b):
    r'''
Difference vector of two lotteries or two acts.
    '''

    if isinstance(a, Act):
        return aa_vectorize(a, b)

    if a.m != b.m:
        raise UsageError('Lottery size mismatch: {0:d} != {1:d}'.format(a.m, b.m))

    return sub(a.probs, b.probs)


def aumann_cone(P):
    r'''
Primitive ray directions of the Aumann cone (zero differences dropped, duplicates merged).
    '''
    return list(lex_sorted([primitive(difference(a, b)) for a, b in P.asserted if not is_zero(difference(a, b))]))


def in_aumann_cone(rays, d, transitive):
    r'''
Check if ``d`` is implied by the rays: zero, on a ray, or (with transitivity) in their conic hull.
    '''

    if is_zero(d):
        return True

    if transitive:
        return member_v(ConeV(len(d), rays), d)

    return any(proportional(r, d) for r in rays)


def check_consistency(P, A):
    r'''
Raise :py:class:`InconsistencyError` if a denied pair is implied by the asserted pairs.
    '''

    rays = aumann_cone(P)

    for a, b in P.denied:
        d = difference(a, b)
        if in_aumann_cone(rays, d, A.transitivity):
            raise InconsistencyError(A, (a, b), d)


def implied(P, A, p, q):
    r'''
Decide whether "p is weakly preferred to q" follows from the data.

*   ``'Yes'``: :math:`p - q` lies in the Aumann cone
    (ray union without transitivity, conic hull with transitivity).
*   ``'No'``: adding the pair would imply a denied pair.
*   ``'Undetermined'``: otherwise.

:param PreferenceData P: The data.
:param AxiomSet A: The axioms.
:param p: Lottery / act (or its coordinates).
:param q: Lottery / act (or its coordinates).
:throw: InconsistencyError
    '''

    check_consistency(P, A)
    rays = aumann_cone(P)
    d = difference(P.make(p), P.make(q))

    if in_aumann_cone(rays, d, A.transitivity):
        return YES

    extended = rays + [primitive(d)]

    for a, b in P.denied:
        if in_aumann_cone(extended, difference(a, b), A.transitivity):
            return NO

    return UNDETERMINED


def _blocks(P):
    if P.ground[0] == 'lotteries':
        return 1, P.ground[1]
    return P.ground[1], P.ground[2]


def multi_utility(P, A):
    r'''
Utility vectors ``U`` with: p weakly preferred to q is implied if and only if
:math:`E_p[u] \ge E_q[u]` for every ``u`` in ``U``.

``U`` generates the dual of the Aumann cone within the space of differences
(for acts: per state).
Utilities are defined up to an additive constant (per state);
each is reported with minimal coordinate 0 (per state).

:throw: UsageError without transitivity, InconsistencyError on inconsistent data.
    '''

    if not A.transitivity:
        raise UsageError('hypothesis violated: multi-utility representation requires transitivity')

    check_consistency(P, A)

    nblock, m = _blocks(P)
    dim = nblock * m
    normals = aumann_cone(P)

    for w in range(nblock):
        ones = tuple(Fraction(1 if i // m == w else 0) for i in range(dim))
        normals += [ones, neg(ones)]

    ret = []

    for u in to_vrep(ConeH(dim, normals)).generators:
        shift = [min(u[w * m: (w + 1) * m]) for w in range(nblock)]
        u = primitive(tuple(u[i] - shift[i // m] for i in range(dim)))
        if not is_zero(u):
            ret.append(u)

    return list(lex_sorted(ret))


def _as_acts(P):
    if P.ground[0] != 'acts':
        raise UsageError('Act data expected')


def aa_implied(P, A, f, g):
    r'''
:py:func:`implied` for acts.
    '''
    _as_acts(P)
    return implied(P, A, f, g)


def aa_multi_utility(P, A):
    r'''
:py:func:`multi_utility` for acts, read back as :math:`m \times |\Omega|` matrices
(``u[z][omega]``).
    '''

    _as_acts(P)
    m = _blocks(P)[1]

    return [[list(row) for row in zip(*convert.blocks(u, m))] for u in multi_utility(P, A)]


def transitivity_certificate(P):
    r'''
Decide if the union of the asserted rays is convex (no transitive closure needed).

A finite union of rays is convex if and only if all rays are collinear.
Otherwise two non-collinear rays ``a``, ``b`` give a combination :math:`c = k a + l b`
on no asserted ray, certified by one separating functional per ray.

:rtype: Convex or CounterexampleTriple
    '''

    rays = aumann_cone(P)

    if rank(rays, P.dim) <= 1:
        return Convex()

    a, b = next((a, b) for i, a in enumerate(rays) for b in rays[i + 1:] if rank([a, b]) == 2)
    on_ray = set(rays)
    n = 2

    while True:
        pairs = [(k, n - k) for k in range(1, n)]
        found = [(k, l) for k, l in pairs if primitive(tuple(k * i + l * j for i, j in zip(a, b))) not in on_ray]
        if found:
            k, l = found[0]
            break
        n += 1

    c = tuple(k * i + l * j for i, j in zip(a, b))
    functionals = tuple((r, lemma_witness(r, r, c)) for r in rays)

    return CounterexampleTriple(a, b, (k, l), c, functionals)


_plane = ((Fraction(1), Fraction(-1), Fraction(0)), (Fraction(0), Fraction(1), Fraction(-1)))


def utility_family(P, A):
    r'''
Family of utility sets for three-outcome lotteries: p weakly preferred to q is implied
if and only if every set contains some ``u`` with :math:`E_p[u] \ge E_q[u]`.

The implied cone lives in the plane of differences with basis
:math:`(1, -1, 0), (0, 1, -1)`; it is represented there by :py:func:`conecalc.cone.closed_cone_rep_2d`,
and each dual vector is lifted to a utility (minimal coordinate 0).

:rtype: conecalc.family.RepFamily
    '''

    if P.ground != ('lotteries', 3):
        raise UsageError('hypothesis violated: utility families are constructed for three outcomes')

    check_consistency(P, A)

    # coordinates in the plane basis: d = s (1, -1, 0) + t (0, 1, -1)
    rays = [primitive((d[0], -d[2])) for d in aumann_cone(P)]

    if A.transitivity:
        C = UnionConeV(2, [ConeV(2, rays)])
    elif len(rays) == 0:
        C = UnionConeV(2, [ConeV(2, [])])
    else:
        C = UnionConeV(2, [ConeV(2, [r]) for r in rays])

    F = closed_cone_rep_2d(C)

    if F.whole_space:
        return RepFamily(3, (), whole_space=True)

    sets = []

    for K in F.sets:
        U = []
        for y in K:
            u = solve_prescribed_values([(_plane[0], y[0]), (_plane[1], y[1])])
            U.append(primitive(tuple(i - min(u) for i in u)))
        sets.append(tuple(U))

    return RepFamily(3, tuple(sets))
