r'''
Polyhedral cones and the duality calculus.

*   :py:class:`ConeV`: finitely generated cone (conic hull of generators).
*   :py:class:`ConeH`: intersection of closed halfspaces through the origin.
*   :py:class:`OpenConeH`: intersection of open halfspaces (a blunted open convex cone).
*   :py:class:`UnionConeV`: finite union of finitely generated cones (closed, not necessarily convex).
*   :py:class:`Sector2D`: angular sector in the plane.

Conversion between generators and halfspaces uses the double description method.

(c) conecalc developers, MIT
'''

from dataclasses import dataclass
from fractions import Fraction
import functools

from .feasibility import EQ
from .feasibility import GE
from .feasibility import GT
from .feasibility import LinIneqSystem
from .feasibility import feasible
from .linalg import UsageError
from .linalg import add
from .linalg import check_dim
from .linalg import format_vector
from .linalg import is_zero
from .linalg import lex_sorted
from .linalg import neg
from .linalg import nullspace
from .linalg import pairing
from .linalg import primitive
from .linalg import project_out
from .linalg import rank
from .linalg import row_echelon
from .linalg import scale
from .linalg import solve
from .linalg import solve_prescribed_values
from .linalg import sub
from .linalg import unit
from .linalg import vector


def _normalize(vectors, dim):
    ret = [primitive(vector(v)) for v in vectors]
    check_dim(ret, dim)
    return lex_sorted([v for v in ret if not is_zero(v)])


@dataclass(frozen=True)
class ConeV:
    r'''
The cone :math:`\{\sum_i \lambda_i g_i : \lambda_i \ge 0\}`.
An empty list of generators is the cone :math:`\{0\}`.
Generators are stored as primitive integer vectors, sorted, without duplicates.
    '''

    dim: int
    generators: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise UsageError('Cone dimension must be positive')
        object.__setattr__(self, 'generators', _normalize(self.generators, self.dim))


@dataclass(frozen=True)
class ConeH:
    r'''
The cone :math:`\{x : \langle x, n \rangle \ge 0 \; \forall n\}`.
An empty list of normals is the whole space.
    '''

    dim: int
    normals: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise UsageError('Cone dimension must be positive')
        object.__setattr__(self, 'normals', _normalize(self.normals, self.dim))


@dataclass(frozen=True)
class OpenConeH:
    r'''
The open cone :math:`\{x : \langle x, n \rangle > 0 \; \forall n\}`.
    '''

    dim: int
    normals: tuple

    def __post_init__(self):
        normals = [primitive(vector(v)) for v in self.normals]
        check_dim(normals, self.dim)
        if len(normals) == 0:
            raise UsageError('An open cone needs at least one normal')
        if any(is_zero(n) for n in normals):
            raise UsageError('Normals of an open cone must be nonzero')
        object.__setattr__(self, 'normals', lex_sorted(normals))


@dataclass(frozen=True)
class UnionConeV:
    r'''
Finite union of :py:class:`ConeV`.
    '''

    dim: int
    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if len(parts) == 0:
            raise UsageError('A union cone needs at least one part')
        for part in parts:
            if part.dim != self.dim:
                raise UsageError('Dimension mismatch: {0:d} != {1:d}'.format(part.dim, self.dim))
        object.__setattr__(self, 'parts', parts)


@dataclass(frozen=True)
class Sector2D:
    r'''
Planar sector swept counter-clockwise from ``start`` to ``end``.
Its angular width is at most a half-turn.
A single ray is a sector with ``start == end`` and both boundaries closed.
    '''

    start: tuple
    end: tuple
    start_open: bool = False
    end_open: bool = False

    def __post_init__(self):
        start = primitive(vector(self.start))
        end = primitive(vector(self.end))
        check_dim([start, end], 2)
        if is_zero(start) or is_zero(end):
            raise UsageError('Sector boundaries must be nonzero')
        if cross(start, end) < 0:
            raise UsageError('Sector wider than a half-turn')
        if start == end and (self.start_open or self.end_open):
            raise UsageError('A single-ray sector must be closed')
        object.__setattr__(self, 'start', start)
        object.__setattr__(self, 'end', end)


def _check(x, dim):
    if len(x) != dim:
        raise UsageError('Dimension mismatch: {0:d} != {1:d}'.format(len(x), dim))


# ---------------------------------------------------------------------------------------------------
# Double description
# ---------------------------------------------------------------------------------------------------


def double_description(normals, dim):
    r'''
Generators of :math:`\{x : \langle x, n \rangle \ge 0 \; \forall n \in \mathrm{normals}\}`.

Constraints are inserted in input order.
The lineality space is tracked as a basis of lines,
extreme rays are combined only if they are adjacent (rank test).

:param list normals: Halfspace normals.
:param int dim: Ambient dimension.

:return:
    Sorted primitive generators:
    extreme rays (projected orthogonally to the lineality space)
    and both orientations of a reduced basis of the lineality space.
    '''

    check_dim(normals, dim)
    lines = [unit(dim, i) for i in range(dim)]
    rays = []
    processed = []

    for a in normals:

        if is_zero(a):
            continue

        i = next((i for i, l in enumerate(lines) if pairing(a, l) != 0), None)

        if i is not None:

            l = lines[i]
            if pairing(a, l) < 0:
                l = neg(l)
            s = pairing(a, l)
            lines = [sub(m, scale(l, pairing(a, m) / s)) for j, m in enumerate(lines) if j != i]
            rays = [sub(r, scale(l, pairing(a, r) / s)) for r in rays] + [l]

        else:

            plus = [r for r in rays if pairing(a, r) > 0]
            zero = [r for r in rays if pairing(a, r) == 0]
            minus = [r for r in rays if pairing(a, r) < 0]
            d = dim - len(lines)
            new = []

            for p in plus:
                for q in minus:
                    common = [n for n in processed if pairing(n, p) == 0 and pairing(n, q) == 0]
                    if rank(common, dim) == d - 2:
                        new.append(sub(scale(q, pairing(a, p)), scale(p, pairing(a, q))))

            rays = plus + zero + new

        rays = list(lex_sorted([primitive(r) for r in rays]))
        processed.append(a)

    lines = row_echelon(lines, dim)[0]
    rays = [primitive(project_out(r, lines)) for r in rays]
    lines = [primitive(l) for l in lines]

    return lex_sorted(rays + lines + [neg(l) for l in lines])


def dual_cone(C):
    r'''
Dual cone :math:`C' = \{y : \langle g, y \rangle \ge 0 \; \forall g\}`.

:param ConeV C: The cone.
:rtype: ConeV
    '''
    return ConeV(C.dim, double_description(C.generators, C.dim))


def to_vrep(H):
    r'''
Generators of a :py:class:`ConeH`.
    '''
    return ConeV(H.dim, double_description(H.normals, H.dim))


def to_hrep(C):
    r'''
Halfspace representation of a :py:class:`ConeV`: the normals are the generators of the dual cone.
    '''
    return ConeH(C.dim, dual_cone(C).generators)


def canonical(C):
    r'''
Minimal generators of a :py:class:`ConeV` (via the bipolar identity).
    '''
    return dual_cone(dual_cone(C))


def lineality(C):
    r'''
Basis of the largest subspace contained in ``C``.
    '''
    return nullspace(list(dual_cone(C).generators), C.dim)


def hull(C):
    r'''
Conic hull of the parts of a :py:class:`UnionConeV`.
    '''
    return ConeV(C.dim, [g for part in C.parts for g in part.generators])


# ---------------------------------------------------------------------------------------------------
# Membership and containment
# ---------------------------------------------------------------------------------------------------


def separable(vectors, x):
    r'''
Check if some :math:`y` has :math:`\langle v, y \rangle \ge 0` for every vector
and :math:`\langle x, y \rangle < 0`, i.e. (Farkas) if ``x`` is *not* in the cone spanned by the vectors.

The system has ``dim`` unknowns, whatever the number of vectors.
    '''

    x = vector(x)
    dim = check_dim(list(vectors) + [x])
    rows = [(v, GE) for v in vectors] + [(neg(x), GT)]

    return feasible(LinIneqSystem(dim, tuple(rows))) is not None


def nonnegative_combination(vectors, x):
    r'''
Nonnegative multipliers :math:`\lambda` with :math:`x = \sum_i \lambda_i v_i`.

Vectors are dropped one at a time as long as ``x`` stays in the cone of those left
(decided by :py:func:`separable`).
What is left is linearly independent (Caratheodory),
so the multipliers follow from :py:func:`conecalc.linalg.solve`.

:param list vectors: The vectors :math:`v_i` (not normalised).
:param tuple x: The target.
:return: The multipliers (ordered as ``vectors``), or ``None`` if no such combination exists.
    '''

    x = vector(x)
    m = len(vectors)

    if m == 0:
        return () if is_zero(x) else None

    dim = check_dim(list(vectors) + [x])

    if is_zero(x):
        return tuple(Fraction(0) for i in range(m))

    if separable(vectors, x):
        return None

    support = list(range(m))

    for i in range(m):
        trial = [j for j in support if j != i]
        if not separable([vectors[j] for j in trial], x):
            support = trial

    coef = solve([tuple(vectors[i][j] for i in support) for j in range(dim)], x, len(support))

    if coef is None or any(c < 0 for c in coef):
        raise RuntimeError('Internal error: no nonnegative combination on the reduced support')

    ret = [Fraction(0)] * m

    for i, c in zip(support, coef):
        ret[i] = c

    return tuple(ret)


def conic_combination(C, x):
    r'''
Certificate for :py:func:`member_v`: multipliers ordered as ``C.generators``, or ``None``.
    '''

    _check(x, C.dim)

    if len(C.generators) == 0:
        return () if is_zero(x) else None

    return nonnegative_combination(C.generators, x)


def member_v(C, x):
    r'''
Check if ``x`` is a nonnegative combination of the generators of ``C``.
    '''

    _check(x, C.dim)

    if len(C.generators) == 0:
        return is_zero(x)

    return not separable(C.generators, x)


def in_hrep(H, x):
    r'''
Check if :math:`\langle x, n \rangle \ge 0` for every normal of a :py:class:`ConeH`.
    '''
    _check(x, H.dim)
    return all(pairing(x, n) >= 0 for n in H.normals)


def in_union(C, x):
    r'''
Membership in a :py:class:`UnionConeV`.
    '''
    return any(member_v(part, x) for part in C.parts)


def contains(C, D):
    r'''
Check if :math:`D \subseteq C`, i.e. every generator of ``D`` belongs to ``C``.
    '''

    if C.dim != D.dim:
        raise UsageError('Dimension mismatch: {0:d} != {1:d}'.format(C.dim, D.dim))

    return all(member_v(C, g) for g in D.generators)


def cone_equal(C, D):
    r'''
Set equality by mutual containment.
    '''
    return contains(C, D) and contains(D, C)


def bipolar_check(C):
    r'''
Check that :math:`C'' = C`. Always ``True``: exposed to exercise the implementation.
    '''
    return cone_equal(dual_cone(dual_cone(C)), C)


# ---------------------------------------------------------------------------------------------------
# Completeness
# ---------------------------------------------------------------------------------------------------


def is_complete(C):
    r'''
Check if :math:`C \cup (-C) = X`.

For a :py:class:`ConeH` with normals :math:`n_i`:
:math:`X \setminus C = \bigcup_i \{\langle x, n_i \rangle < 0\}` and
:math:`X \setminus (-C) = \bigcup_j \{\langle x, n_j \rangle > 0\}`,
so the cone is complete if and only if no system
:math:`\{\langle x, -n_i \rangle > 0, \langle x, n_j \rangle > 0\}` is feasible.

:type C: ConeH, ConeV, UnionConeV
:param C: The cone. A :py:class:`ConeV` is converted first,
    a :py:class:`UnionConeV` is decided on the hyperplane arrangement of its parts.
    '''

    if isinstance(C, UnionConeV):
        return all(in_union(C, w) or in_union(C, neg(w)) for signs, w in arrangement_faces(C))

    if isinstance(C, ConeV):
        C = to_hrep(C)

    for ni in C.normals:
        for nj in C.normals:
            if ni == nj:
                continue
            if feasible(LinIneqSystem(C.dim, ((neg(ni), GT), (nj, GT)))) is not None:
                return False

    return True


def pairwise_G_intersections(nonmembers):
    r'''
Check that :math:`G_{x_1} \cap G_{x_2} \neq \emptyset` for every pair of vectors,
with :math:`G_x = \{y : \langle x, y \rangle < 0\}`.
    '''

    dim = check_dim(nonmembers)

    for i, a in enumerate(nonmembers):
        for b in nonmembers[i:]:
            if feasible(LinIneqSystem(dim, ((neg(a), GT), (neg(b), GT)))) is None:
                return False

    return True


# ---------------------------------------------------------------------------------------------------
# Convexity: the three-case witness
# ---------------------------------------------------------------------------------------------------


def lemma_case(a, b, c):
    r'''
Case of the constructive witness for :math:`G_c \setminus (G_a \cup G_b) \neq \emptyset`:

*   ``'i'``: :math:`b, c \in \mathrm{span}(\{a\})`.
*   ``'ii'``: :math:`c \in \mathrm{span}(\{a, b\})` and :math:`b \notin \mathrm{span}(\{a\})`.
*   ``'iii'``: :math:`c \notin \mathrm{span}(\{a, b\})`.
    '''

    rab = rank([a, b])
    rabc = rank([a, b, c])

    if rabc > rab:
        return 'iii'
    if rab == 1:
        return 'i'
    return 'ii'


def lemma_witness(a, b, c):
    r'''
Construct :math:`y` with :math:`\langle c, y \rangle < 0`, :math:`\langle a, y \rangle \ge 0`,
:math:`\langle b, y \rangle \ge 0`, for nonzero ``a``, ``b``, ``c`` with
:math:`c \notin \mathrm{co}(\mathrm{cone}(\{a, b\}))`.

The construction follows three cases (see :py:func:`lemma_case`),
each realised by prescribing pairings with :py:func:`conecalc.linalg.solve_prescribed_values`:

*   Case i: :math:`\langle a, y \rangle = 1`.
*   Case ii, with :math:`c = \alpha a + \beta b` relabelled so that :math:`\alpha < 0`:
    :math:`\langle a, y \rangle = \langle b, y \rangle = 1` if :math:`\beta \le 0`,
    otherwise :math:`\langle a, y \rangle = 1` and :math:`\langle b, y \rangle = -\alpha / (2 \beta)`.
*   Case iii: :math:`\langle a, y \rangle = \langle b, y \rangle = 0` and :math:`\langle c, y \rangle = -1`.

:throw: UsageError if a vector is zero or if ``c`` lies in the conic hull of ``a`` and ``b``.
    '''

    a, b, c = vector(a), vector(b), vector(c)
    check_dim([a, b, c])

    if is_zero(a) or is_zero(b) or is_zero(c):
        raise UsageError('hypothesis violated: a, b, c must be nonzero')

    if member_v(ConeV(len(a), [a, b]), c):
        raise UsageError('hypothesis violated: c = {0:s} belongs to co(cone({{a, b}}))'.format(format_vector(c)))

    case = lemma_case(a, b, c)

    if case == 'i':
        targets = [(a, 1)]

    elif case == 'ii':
        alpha, beta = solve([(a[j], b[j]) for j in range(len(a))], c, 2)
        if alpha >= 0:
            a, b = b, a
            alpha, beta = beta, alpha
        if beta <= 0:
            targets = [(a, 1), (b, 1)]
        else:
            targets = [(a, 1), (b, -alpha / (2 * beta))]

    else:
        targets = [(a, 0), (b, 0), (c, -1)]

    return solve_prescribed_values(targets)


def convexity_witness(a, b, c):
    r'''
Certify the dichotomy for :math:`c` and :math:`\mathrm{co}(\mathrm{cone}(\{a, b\}))`.

:return:
    ``('hull', (lambda_a, lambda_b))`` with :math:`c = \lambda_a a + \lambda_b b`, or
    ``('separated', y)`` with ``y`` from :py:func:`lemma_witness`.
    '''

    a, b, c = vector(a), vector(b), vector(c)
    check_dim([a, b, c])
    lam = nonnegative_combination([a, b], c)

    if lam is None:
        return ('separated', lemma_witness(a, b, c))

    return ('hull', lam)


# ---------------------------------------------------------------------------------------------------
# Interior, open cones
# ---------------------------------------------------------------------------------------------------


def interior_member(C, x):
    r'''
Check if ``x`` is an interior point of the full-dimensional cone ``C``:
:math:`\langle x, d \rangle > 0` for every generator ``d`` of :math:`C'`.

:throw: UsageError if ``C`` has empty interior.
    '''

    _check(x, C.dim)

    if rank(list(C.generators), C.dim) < C.dim:
        raise UsageError('hypothesis violated: cone has empty interior (not full-dimensional)')

    return all(pairing(x, d) > 0 for d in dual_cone(C).generators)


def open_cone_member(U, x):
    r'''
Check if :math:`\langle x, n \rangle > 0` for every normal of an :py:class:`OpenConeH`.
    '''
    _check(x, U.dim)
    return all(pairing(x, n) > 0 for n in U.normals)


def open_cone_canonical(U):
    r'''
Closed convex cone generated by the normals of an open cone, in minimal form.
Two normal lists describing the same open cone give the same result.

:throw: UsageError if the open cone is empty.
    '''

    if feasible(LinIneqSystem(U.dim, tuple((n, GT) for n in U.normals))) is None:
        raise UsageError('hypothesis violated: the open cone is empty')

    return canonical(ConeV(U.dim, U.normals))


# ---------------------------------------------------------------------------------------------------
# Planar sectors
# ---------------------------------------------------------------------------------------------------


def cross(p, q):
    return p[0] * q[1] - p[1] * q[0]


def _half(d):
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def _angle_cmp(p, q):
    h = _half(p) - _half(q)
    if h != 0:
        return h
    c = cross(p, q)
    return -1 if c > 0 else (1 if c < 0 else 0)


angle_key = functools.cmp_to_key(_angle_cmp)


def _rot90(p):
    return (-p[1], p[0])


def sector_cone(sector):
    r'''
Closed sector as a :py:class:`ConeV`.
    '''

    if sector.start == sector.end:
        return ConeV(2, [sector.start])

    if cross(sector.start, sector.end) == 0:
        return ConeV(2, [sector.start, sector.end, _rot90(sector.start)])

    return ConeV(2, [sector.start, sector.end])


def sector_open_cone(sector):
    r'''
Open sector as an :py:class:`OpenConeH` (one normal for a half-plane, two otherwise).
    '''

    p, q = sector.start, sector.end

    if p == q:
        raise UsageError('A single ray is not an open sector')

    if cross(p, q) == 0:
        return OpenConeH(2, [_rot90(p)])

    return OpenConeH(2, [_rot90(p), (q[1], -q[0])])


def directions_2d(count=360):
    r'''
Rational direction sweep of the plane: ``count`` points on the boundary of the square
:math:`[-1, 1]^2`, counter-clockwise from :math:`(1, -1)`.

:param int count: Number of directions (multiple of 4).
    '''

    if count % 4 != 0:
        raise UsageError('Direction count must be a multiple of 4')

    q = count // 4
    ret = []

    for k in range(q):
        t = Fraction(2 * k, q)
        ret.append((Fraction(1), -1 + t))
    for k in range(q):
        t = Fraction(2 * k, q)
        ret.append((1 - t, Fraction(1)))
    for k in range(q):
        t = Fraction(2 * k, q)
        ret.append((Fraction(-1), 1 - t))
    for k in range(q):
        t = Fraction(2 * k, q)
        ret.append((-1 + t, Fraction(-1)))

    return ret


def complement_sectors_2d(C):
    r'''
Cover of the complement of a closed planar cone by open sectors of width at most a half-turn.

The circle of directions is cut at the generators of all parts and at the coordinate axes,
so that every elementary open arc is at most a quarter-turn.
Membership is constant on each cut direction and each elementary arc.
Every maximal excluded run between two included directions is covered by open windows
spanning two consecutive elementary arcs (overlapping windows are allowed).

:type C: UnionConeV, ConeV
:rtype: list of Sector2D
    '''

    if isinstance(C, ConeV):
        C = UnionConeV(C.dim, [C])

    if C.dim != 2:
        raise UsageError('hypothesis violated: the constructive representation is planar (dim = 2)')

    cuts = [unit(2, 0), unit(2, 1), neg(unit(2, 0)), neg(unit(2, 1))]
    cuts += [g for part in C.parts for g in part.generators]
    cuts = sorted(set(primitive(c) for c in cuts), key=angle_key)
    k = len(cuts)

    included = [in_union(C, d) for d in cuts]
    arc = [in_union(C, add(cuts[i], cuts[(i + 1) % k])) for i in range(k)]

    for i in range(k):
        if arc[i] and not (included[i] and included[(i + 1) % k]):
            raise UsageError('hypothesis violated: the cone is not closed')

    runs = []

    if not any(included):
        runs.append([cuts[i % k] for i in range(k + 2)])
        sectors = [Sector2D(run[i], run[i + 2], True, True) for run in runs for i in range(k)]
        return sectors

    for s in range(k):
        if not included[s] or arc[s]:
            continue
        seq = [cuts[s]]
        j = (s + 1) % k
        while not included[j]:
            seq.append(cuts[j])
            j = (j + 1) % k
        seq.append(cuts[j])
        runs.append(seq)

    sectors = []

    for seq in runs:
        if len(seq) == 2:
            sectors.append(Sector2D(seq[0], seq[1], True, True))
            continue
        for i in range(len(seq) - 2):
            sectors.append(Sector2D(seq[i], seq[i + 2], True, True))

    return sectors


def closed_cone_rep_2d(C):
    r'''
Representation family of a closed planar cone.

The complement of ``C`` is covered by open convex sectors
:math:`U_j = \{x : \langle x, n \rangle > 0 \; \forall n \in N_j\}`,
and the family is :math:`\{-N_j\}_j`: a direction is excluded by the set :math:`-N_j`
exactly when it lies in the open sector :math:`j`.

:type C: UnionConeV, ConeV
:return: The family (the whole-space convention family if ``C`` is the whole plane).
:rtype: conecalc.family.RepFamily
    '''

    from .family import RepFamily
    from .family import family_from_open_cones

    sectors = complement_sectors_2d(C)

    if len(sectors) == 0:
        return RepFamily(2, (), whole_space=True)

    return family_from_open_cones([sector_open_cone(s) for s in sectors])


# ---------------------------------------------------------------------------------------------------
# Hyperplane arrangement of a union cone
# ---------------------------------------------------------------------------------------------------


def arrangement_faces(C):
    r'''
Faces of the hyperplane arrangement spanned by the facet normals of all parts.

Each part is an intersection of halfspaces of the arrangement,
so membership in the union is constant on every face.

:param UnionConeV C: The cone.
:return: List of ``(signs, witness)``: the sign vector of a face (+1, 0, -1) and a point on it.
    '''

    planes = {}

    for part in C.parts:
        for n in to_hrep(part).normals:
            if neg(n) not in planes:
                planes[n] = True

    planes = list(planes)

    if len(planes) == 0:
        planes = [unit(C.dim, i) for i in range(C.dim)]

    ret = []

    def recurse(signs, rows):

        w = feasible(LinIneqSystem(C.dim, tuple(rows)))

        if w is None:
            return

        if len(signs) == len(planes):
            ret.append((tuple(signs), w))
            return

        h = planes[len(signs)]
        recurse(signs + [1], rows + [(h, GT)])
        recurse(signs + [0], rows + [(h, EQ)])
        recurse(signs + [-1], rows + [(neg(h), GT)])

    recurse([], [])

    return [(tuple(zip(planes, signs)), w) for signs, w in ret]


def _face_rows(face):
    rows = []
    for h, s in face:
        if s == 0:
            rows.append((h, EQ))
        else:
            rows.append((h if s > 0 else neg(h), GT))
    return rows


def is_convex_union(C):
    r'''
Check if a :py:class:`UnionConeV` is convex:
no face outside the union meets the conic hull of the parts.
    '''

    H = to_hrep(hull(C))

    for face, w in arrangement_faces(C):
        if in_union(C, w):
            continue
        rows = _face_rows(face) + [(n, GE) for n in H.normals]
        if feasible(LinIneqSystem(C.dim, tuple(rows))) is not None:
            return False

    return True


def justifiable_K(C):
    r'''
Finite set ``K`` with :math:`C = \{x : \exists y \in K, \langle x, y \rangle \ge 0\}`.

Hypotheses (each checked):

*   ``C`` is closed (true for a :py:class:`UnionConeV`);
*   :math:`C \cup (-C) = X`;
*   :math:`D := C \setminus (-C)` is convex.

Then :math:`D` is an open convex cone, :math:`D = \mathrm{int}(\mathrm{cl}(D))`,
and ``K`` is the set of generators of :math:`\mathrm{cl}(D)'`.

:type C: UnionConeV, ConeV
:return: ``K`` as a :py:class:`ConeV` (no generators: :math:`K = \{0\}`, i.e. :math:`C = X`).
:throw: UsageError naming the failed hypothesis.
    '''

    if isinstance(C, ConeV):
        C = UnionConeV(C.dim, [C])

    faces = arrangement_faces(C)
    inside = {}

    for face, w in faces:
        a = in_union(C, w)
        b = in_union(C, neg(w))
        if not (a or b):
            raise UsageError('axiom violated: C is not complete, {0:s} not in C or -C'.format(format_vector(w)))
        inside[face] = a and not b

    D = [face for face, w in faces if inside[face]]

    if len(D) == 0:
        return ConeV(C.dim, [])

    full = [face for face in D if all(s != 0 for h, s in face)]

    if len(full) == 0:
        raise UsageError('hypothesis violated: C is not closed')

    gens = []

    for face in full:
        gens += to_vrep(ConeH(C.dim, [h if s > 0 else neg(h) for h, s in face])).generators

    P = ConeV(C.dim, gens)
    U = dual_cone(P)

    for face, w in faces:
        if inside[face]:
            continue
        rows = _face_rows(face) + [(n, GT) for n in U.generators]
        if feasible(LinIneqSystem(C.dim, tuple(rows))) is not None:
            raise UsageError('axiom violated: C \\ (-C) is not convex')

    return U


def justifiable_member(K, x):
    r'''
Check if :math:`\exists y \in K, \langle x, y \rangle \ge 0` (``K`` without generators is :math:`\{0\}`).
    '''

    _check(x, K.dim)

    if len(K.generators) == 0:
        return True

    return any(pairing(x, y) >= 0 for y in K.generators)


# ---------------------------------------------------------------------------------------------------
# Sub-cone comparison and dual inclusion
# ---------------------------------------------------------------------------------------------------


def evren_check(A, B, C):
    r'''
Compare :math:`A \subseteq B` with :math:`B' \cap D \subseteq A' \cap D`,
where :math:`D = C - C` is the span of ``C``.
Both sides are computed independently; the result is whether they agree (always ``True``).

:throw: UsageError if ``A`` or ``B`` is not contained in ``D``, or on dimension mismatch.
    '''

    if not (A.dim == B.dim == C.dim):
        raise UsageError('Dimension mismatch')

    span = list(C.generators)
    perp = nullspace(span, C.dim)

    for g in A.generators + B.generators:
        if any(pairing(g, w) != 0 for w in perp):
            raise UsageError('hypothesis violated: {0:s} is not in the span of C'.format(format_vector(g)))

    eq = [w for w in perp] + [neg(w) for w in perp]
    BD = to_vrep(ConeH(C.dim, list(B.generators) + eq))
    AD = to_vrep(ConeH(C.dim, list(A.generators) + eq))

    return contains(B, A) == contains(AD, BD)


def dual_inclusion_check(H, family, C):
    r'''
Verify: if every set of a representation family meets ``H``, then :math:`H' \subseteq C`.

:param ConeV H: Closed convex cone (in the dual space).
:param RepFamily family: A family representing ``C``.
:param ConeH C: The represented cone.
:return: ``True`` if the implication holds (vacuously if some set misses ``H``).
    '''

    meets = all(any(member_v(H, y) for y in K) for K in family.sets)

    if not meets:
        return True

    return all(in_hrep(C, g) for g in dual_cone(H).generators)
