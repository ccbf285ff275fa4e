import unittest
import itertools
from fractions import Fraction as F

import numpy as np

import conecalc
from conecalc.cone import ConeH
from conecalc.cone import ConeV
from conecalc.cone import UnionConeV
from conecalc.cone import cross
from conecalc.decision import Act
from conecalc.decision import AxiomSet
from conecalc.decision import Lottery
from conecalc.decision import PreferenceData
from conecalc.family import RepFamily
from conecalc.feasibility import GT
from conecalc.feasibility import LinIneqSystem
from conecalc.linalg import is_zero
from conecalc.linalg import neg
from conecalc.linalg import pairing
from conecalc.oracle import GridSpec


def random_vector(rng, dim, bound=3):
    while True:
        x = tuple(F(int(i)) for i in rng.randint(-bound, bound + 1, size=dim))
        if not is_zero(x):
            return x


def random_cone(rng, dim, count):
    return ConeV(dim, [random_vector(rng, dim) for i in range(count)])


def random_lottery(rng, m):
    w = rng.randint(0, 4, size=m)
    if w.sum() == 0:
        w[rng.randint(m)] = 1
    return Lottery(m, [F(int(i), int(w.sum())) for i in w])


def in_sector(p, q, x):
    r'''
Membership in the closed sector from ``p`` to ``q`` (counter-clockwise, narrower than a half-turn).
    '''

    if conecalc.linalg.primitive(p) == conecalc.linalg.primitive(q):
        return conecalc.linalg.proportional(p, x)

    return cross(p, x) >= 0 and cross(x, q) >= 0


def simplex_grid(m, n):
    r'''
All lotteries on ``m`` outcomes with probabilities in multiples of ``1 / n``.
    '''
    return [
        Lottery(m, [F(i, n) for i in k])
        for k in itertools.product(range(n + 1), repeat=m) if sum(k) == n]


def realise(U0, nblock, m):
    r'''
Pairs of objects whose differences generate the cone dominated by ``U0``.
    '''

    dim = nblock * m
    normals = list(U0)

    for w in range(nblock):
        ones = tuple(F(1 if i // m == w else 0) for i in range(dim))
        normals += [ones, neg(ones)]

    ret = []

    for g in conecalc.cone.to_vrep(ConeH(dim, normals)).generators:
        t = F(1, m * max(abs(i) for i in g))
        p = [F(1, m) + t * i for i in g]
        q = [F(1, m)] * dim
        if nblock == 1:
            ret.append((Lottery(m, p), Lottery(m, q)))
        else:
            blocks = lambda x: [Lottery(m, x[w * m: (w + 1) * m]) for w in range(nblock)]
            ret.append((Act(nblock, m, blocks(p)), Act(nblock, m, blocks(q))))

    return ret


class Test_feasibility(unittest.TestCase):

    def test_grid_oracle(self):

        rng = np.random.RandomState(1)
        # values p / q with |p| <= 8 and q in {1, 2, 3}, scaled by 6 to integers
        values = sorted(set(6 * F(p, q) for p in range(-8, 9) for q in [1, 2, 3]))
        values = [int(i) for i in values]
        self.assertEqual(len(values), 37)
        grids = {d: np.array(list(itertools.product(values, repeat=d)), dtype=np.int64) for d in [1, 2, 3]}
        nfeasible = 0

        for i in range(100):
            dim = int(rng.randint(1, 4))
            rows = []
            for j in range(rng.randint(0, 4)):
                rows.append((random_vector(rng, dim, 2), ['GE', 'GT', 'EQ'][rng.randint(3)]))
            rows.append((random_vector(rng, dim, 2), GT))
            sys = LinIneqSystem(dim, tuple(rows))
            Y = grids[dim]
            mask = np.ones(len(Y), dtype=bool)
            for normal, relation in sys.rows:
                value = Y @ np.array([int(c) for c in normal], dtype=np.int64)
                if relation == 'GE':
                    mask &= value >= 0
                elif relation == 'GT':
                    mask &= value > 0
                else:
                    mask &= value == 0
            y = conecalc.feasibility.feasible(sys)
            if np.any(mask):
                self.assertIsNotNone(y)
            if y is not None:
                self.assertTrue(conecalc.feasibility.satisfies(sys, y))
                nfeasible += 1

        self.assertGreater(nfeasible, 0)
        self.assertLess(nfeasible, 100)

    def test_row_scaling(self):

        rng = np.random.RandomState(16)

        for i in range(100):
            dim = int(rng.randint(2, 5))
            rows = [
                (random_vector(rng, dim), ['GE', 'GT', 'EQ'][rng.randint(3)])
                for j in range(rng.randint(1, 6))]
            sys = LinIneqSystem(dim, tuple(rows))
            scaled = LinIneqSystem(dim, tuple(
                (conecalc.linalg.scale(n, F(int(rng.randint(1, 7)), int(rng.randint(1, 7)))), r) for n, r in rows))
            y = conecalc.feasibility.feasible(sys)
            z = conecalc.feasibility.feasible(scaled)
            self.assertEqual(y is None, z is None)
            if z is not None:
                self.assertTrue(conecalc.feasibility.satisfies(sys, z))


class Test_linalg(unittest.TestCase):

    def test_solve_prescribed_values(self):

        rng = np.random.RandomState(17)

        for i in range(100):
            dim = int(rng.randint(1, 6))
            y0 = tuple(F(int(j)) for j in rng.randint(-4, 5, size=dim))
            targets = [(x, pairing(x, y0)) for x in [random_vector(rng, dim) for j in range(rng.randint(1, dim + 2))]]
            y = conecalc.linalg.solve_prescribed_values(targets)
            self.assertIsNotNone(y)
            for x, c in targets:
                self.assertEqual(pairing(x, y), c)

    def test_rank_invariance(self):

        rng = np.random.RandomState(18)

        for i in range(100):
            dim = int(rng.randint(1, 6))
            rows = [random_vector(rng, dim) for j in range(rng.randint(1, 7))]
            r = conecalc.linalg.rank(rows, dim)
            scaled = [conecalc.linalg.scale(x, F(int(rng.randint(1, 5)), int(rng.randint(1, 5)))) for x in rows]
            permuted = [scaled[int(j)] for j in rng.permutation(len(rows))]
            self.assertEqual(conecalc.linalg.rank(permuted, dim), r)
            self.assertLessEqual(r, min(dim, len(rows)))


class Test_cone(unittest.TestCase):

    def test_bipolar(self):

        rng = np.random.RandomState(2)

        for i in range(200):
            dim = int(rng.randint(2, 6))
            C = ConeV(dim, [random_vector(rng, dim, 5) for j in range(rng.randint(1, 9))])
            D = conecalc.cone.dual_cone(C)
            self.assertTrue(conecalc.cone.cone_equal(conecalc.cone.dual_cone(D), C))
            for g in C.generators:
                for y in D.generators:
                    self.assertGreaterEqual(pairing(g, y), 0)

    def test_antitone(self):

        rng = np.random.RandomState(3)

        for i in range(200):
            dim = int(rng.randint(2, 6))
            C = random_cone(rng, dim, rng.randint(1, 7))
            if i % 2 == 0:
                D = ConeV(dim, list(C.generators) + [random_vector(rng, dim) for j in range(rng.randint(1, 3))])
            else:
                D = random_cone(rng, dim, rng.randint(1, 9))
            self.assertEqual(
                conecalc.cone.contains(D, C),
                conecalc.cone.contains(conecalc.cone.dual_cone(C), conecalc.cone.dual_cone(D)))

    def test_membership_duality(self):

        rng = np.random.RandomState(4)

        for i in range(50):
            dim = int(rng.randint(2, 6))
            C = random_cone(rng, dim, rng.randint(1, 9))
            H = conecalc.cone.to_hrep(C)
            for j in range(10):
                x = random_vector(rng, dim)
                self.assertEqual(conecalc.cone.member_v(C, x), conecalc.cone.in_hrep(H, x))
                self.assertEqual(
                    conecalc.cone.member_v(C, x),
                    conecalc.oracle.in_cone_by_definition(C.generators, x))

    def test_lemma(self):

        rng = np.random.RandomState(5)
        count = 0

        while count < 500:
            dim = int(rng.randint(2, 5))
            a, b, c = [random_vector(rng, dim) for i in range(3)]
            if conecalc.cone.member_v(ConeV(dim, [a, b]), c):
                continue
            y = conecalc.cone.lemma_witness(a, b, c)
            self.assertLess(pairing(c, y), 0)
            self.assertGreaterEqual(pairing(a, y), 0)
            self.assertGreaterEqual(pairing(b, y), 0)
            count += 1

    def test_lemma_hull(self):

        rng = np.random.RandomState(6)
        # doubled grid: coordinates k / 2 with |k / 2| <= 4
        grids = {d: np.array(list(itertools.product(range(-8, 9), repeat=d)), dtype=np.int64) for d in [2, 3, 4]}

        for i in range(100):
            dim = int(rng.randint(2, 5))
            a, b = random_vector(rng, dim), random_vector(rng, dim)
            k, l = [int(i) for i in rng.randint(0, 3, size=2)]
            c = tuple(k * i + l * j for i, j in zip(a, b))
            if is_zero(c):
                continue
            # no grid point separates c from a and b
            Y = grids[dim]
            A = Y @ np.array([int(i) for i in a])
            B = Y @ np.array([int(i) for i in b])
            C = Y @ np.array([int(i) for i in c])
            self.assertFalse(np.any((C < 0) & (A >= 0) & (B >= 0)))
            self.assertEqual(conecalc.cone.convexity_witness(a, b, c)[0], 'hull')

    def test_completeness(self):

        rng = np.random.RandomState(7)
        ncomplete = 0
        nincomplete = 0

        while ncomplete < 50 or nincomplete < 50:
            dim = int(rng.randint(2, 5))
            n = random_vector(rng, dim)
            if ncomplete < 50:
                C = ConeH(dim, [n, conecalc.linalg.scale(n, int(rng.randint(1, 4)))])
                ncomplete += 1
            else:
                C = ConeH(dim, [n, random_vector(rng, dim)])
                if len(C.normals) == 1:
                    continue
                nincomplete += 1
            sample = []
            if len(C.normals) > 1:
                # w and -w both lie outside the cone
                ni, nj = C.normals[:2]
                w = conecalc.feasibility.feasible(LinIneqSystem(dim, ((neg(ni), GT), (nj, GT))))
                sample += [w, neg(w)]
            while len(sample) < 20:
                x = random_vector(rng, dim)
                if not conecalc.cone.in_hrep(C, x):
                    sample.append(x)
            self.assertEqual(conecalc.cone.is_complete(C), conecalc.cone.pairwise_G_intersections(sample))

    def test_representation_bridge(self):

        rng = np.random.RandomState(8)
        grid = GridSpec(2, 3, (1, 2)).points()

        for i in range(100):
            C = random_cone(rng, 2, rng.randint(1, 4))
            F = conecalc.family.dual_singletons(C)
            rays = [(-y[1], y[0]) for y in conecalc.cone.dual_cone(C).generators]
            for x in grid + list(C.generators) + rays + [neg(y) for y in rays]:
                self.assertEqual(conecalc.family.family_member(F, x), conecalc.cone.member_v(C, x))

    def test_sector_unions(self):

        rng = np.random.RandomState(9)
        directions = conecalc.cone.directions_2d(360)

        for i in range(50):
            sectors = []
            for j in range(rng.randint(1, 4)):
                p = random_vector(rng, 2)
                q = p if rng.randint(4) == 0 else random_vector(rng, 2)
                if cross(p, q) < 0:
                    p, q = q, p
                if cross(p, q) == 0 and conecalc.linalg.primitive(p) != conecalc.linalg.primitive(q):
                    q = p
                sectors.append((p, q))
            C = UnionConeV(2, [ConeV(2, [p, q]) for p, q in sectors])
            K = conecalc.cone.closed_cone_rep_2d(C)
            for x in directions + [g for part in C.parts for g in part.generators]:
                inside = any(in_sector(p, q, x) for p, q in sectors)
                self.assertEqual(conecalc.family.family_member(K, x), inside)

    def test_justifiable(self):

        rng = np.random.RandomState(10)
        directions = conecalc.cone.directions_2d(120)

        for i in range(25):
            n1, n2 = random_vector(rng, 2), random_vector(rng, 2)
            if conecalc.linalg.proportional(n1, neg(n2)):
                continue
            halfplane = lambda n: ConeV(2, [(-n[1], n[0]), (n[1], -n[0]), n])
            C = UnionConeV(2, [halfplane(n1), halfplane(n2)])
            K = conecalc.cone.justifiable_K(C)
            self.assertTrue(all(pairing(y, y) > 0 for y in K.generators))
            for x in directions:
                self.assertEqual(
                    conecalc.cone.justifiable_member(K, x),
                    pairing(x, n1) >= 0 or pairing(x, n2) >= 0)

    def test_evren(self):

        rng = np.random.RandomState(19)

        def in_span(C):
            while True:
                k = rng.randint(-2, 3, size=len(C.generators))
                x = tuple(sum(int(c) * g[j] for c, g in zip(k, C.generators)) for j in range(C.dim))
                if not is_zero(x):
                    return x

        for i in range(50):
            dim = int(rng.randint(2, 5))
            C = random_cone(rng, dim, rng.randint(1, dim + 1))
            A = ConeV(dim, [in_span(C) for j in range(rng.randint(1, 4))])
            B = ConeV(dim, list(A.generators) + [in_span(C)]) if i % 2 == 0 else ConeV(
                dim, [in_span(C) for j in range(rng.randint(1, 4))])
            self.assertTrue(conecalc.cone.evren_check(A, B, C))

    def test_dual_inclusion(self):

        rng = np.random.RandomState(20)

        for i in range(50):
            dim = int(rng.randint(2, 5))
            C = random_cone(rng, dim, rng.randint(1, 5))
            family = conecalc.family.dual_singletons(C)
            if family.whole_space:
                continue
            extra = [random_vector(rng, dim) for j in range(rng.randint(0, 3))]
            if i % 2 == 0:
                H = ConeV(dim, [K[0] for K in family.sets] + extra)
            else:
                H = ConeV(dim, extra + [random_vector(rng, dim)])
            self.assertTrue(conecalc.cone.dual_inclusion_check(H, family, conecalc.cone.to_hrep(C)))

    def test_interior_boundary(self):

        rng = np.random.RandomState(21)
        count = 0

        while count < 50:
            dim = int(rng.randint(2, 5))
            C = random_cone(rng, dim, rng.randint(dim, dim + 4))
            if conecalc.linalg.rank(list(C.generators), dim) < dim:
                continue
            count += 1
            D = conecalc.cone.dual_cone(C)
            for x in list(C.generators) + [random_vector(rng, dim) for j in range(10)]:
                inside = conecalc.cone.interior_member(C, x)
                if inside:
                    self.assertTrue(conecalc.cone.member_v(C, x))
                elif conecalc.cone.member_v(C, x):
                    self.assertTrue(any(pairing(x, d) == 0 for d in D.generators))


class Test_family(unittest.TestCase):

    def test_hat_equal(self):

        rng = np.random.RandomState(22)

        for i in range(50):
            dim = int(rng.randint(2, 5))
            C = random_cone(rng, dim, rng.randint(1, 5))
            F1 = conecalc.family.dual_singletons(C)
            if F1.whole_space:
                continue
            D = conecalc.cone.dual_cone(C).generators
            # the same cone, with redundant sets
            F2 = RepFamily(dim, F1.sets + tuple((a, b) for a, b in zip(D, D[1:])))
            other = random_cone(rng, dim, rng.randint(1, 5))
            F3 = conecalc.family.dual_singletons(other)
            sample = list(C.generators) + list(D) + [random_vector(rng, dim) for j in range(30)]
            self.assertEqual(conecalc.family.hat_equal_on_sample(F1, F2, sample), (True, None))
            expect = [x for x in sample if conecalc.cone.member_v(C, x) != conecalc.cone.member_v(other, x)]
            equal, x = conecalc.family.hat_equal_on_sample(F1, F3, sample)
            self.assertEqual(equal, len(expect) == 0)
            if not equal:
                self.assertEqual(x, expect[0])

    def test_normalize_family(self):

        rng = np.random.RandomState(23)
        directions = conecalc.cone.directions_2d(360)

        for i in range(50):
            dim = 2 if i < 10 else int(rng.randint(2, 6))
            sets = [
                tuple(random_vector(rng, dim) for k in range(rng.randint(1, 5)))
                for j in range(rng.randint(1, 4))]
            family = RepFamily(dim, tuple(sets))
            normal = conecalc.family.normalize_family(family)
            sample = directions if dim == 2 else [random_vector(rng, dim) for j in range(50)]
            for x in sample:
                self.assertEqual(conecalc.family.family_member(normal, x), conecalc.family.family_member(family, x))

    def test_trivial_on_grid(self):

        rng = np.random.RandomState(24)
        grid = GridSpec(2, 3, (1, 2)).points()
        ntrivial = 0

        for i in range(50):
            a, b = random_vector(rng, 2), random_vector(rng, 2)
            if i % 2 == 0:
                K = [a, b, neg(conecalc.linalg.add(a, b))]
                if is_zero(K[2]):
                    continue
            else:
                K = [a, b]
            trivial, witness = conecalc.family.is_trivial(K)
            if trivial:
                ntrivial += 1
                family = RepFamily(2, (tuple(K), ))
                self.assertTrue(all(conecalc.family.family_member(family, x) for x in grid))
            else:
                self.assertTrue(all(pairing(witness, y) < 0 for y in K))

        self.assertGreater(ntrivial, 0)

    def test_Gx_never_trivial(self):

        rng = np.random.RandomState(25)

        for x in GridSpec(2, 2, (1, 2)).points():
            if is_zero(x):
                continue
            G = conecalc.family.GxCone(x)
            count = int(rng.randint(1, 5))
            K = []
            while len(K) < count:
                y = random_vector(rng, 2)
                if G.contains(y):
                    K.append(y)
            self.assertTrue(G.includes(K))
            trivial, witness = conecalc.family.is_trivial(K)
            self.assertFalse(trivial)
            self.assertTrue(all(pairing(witness, y) < 0 for y in K))


class Test_decision(unittest.TestCase):

    def test_independence(self):

        rng = np.random.RandomState(11)

        for i in range(50):
            m = int(rng.randint(2, 5))
            a, b, c = [random_lottery(rng, m) for j in range(3)]
            alpha = F(int(rng.randint(1, 5)), 5)
            P = PreferenceData(('lotteries', m), [(a, b)])
            p = conecalc.decision.mix(alpha, a, c)
            q = conecalc.decision.mix(alpha, b, c)
            self.assertEqual(conecalc.decision.implied(P, AxiomSet(), p, q), 'Yes')

    def test_monotone(self):

        rng = np.random.RandomState(12)

        for i in range(40):
            m = 3
            P = PreferenceData(('lotteries', m), [
                (random_lottery(rng, m), random_lottery(rng, m)) for j in range(rng.randint(1, 4))])
            p, q = random_lottery(rng, m), random_lottery(rng, m)
            if conecalc.decision.implied(P, AxiomSet(), p, q) == 'Yes':
                self.assertEqual(conecalc.decision.implied(P, AxiomSet(transitivity=True), p, q), 'Yes')

    def test_transitive_five_outcomes(self):

        rng = np.random.RandomState(26)
        T = AxiomSet(transitivity=True)

        for i in range(5):
            m = 5
            P = PreferenceData(('lotteries', m), [
                (random_lottery(rng, m), random_lottery(rng, m)) for j in range(20)])
            rays = conecalc.decision.aumann_cone(P)
            for j in range(10):
                p, q = random_lottery(rng, m), random_lottery(rng, m)
                d = conecalc.decision.difference(p, q)
                if conecalc.decision.implied(P, T, p, q) == 'Yes':
                    lam = conecalc.cone.nonnegative_combination(rays, d)
                    self.assertTrue(all(l >= 0 for l in lam))
                    r = tuple(sum(l * g[k] for l, g in zip(lam, rays)) for k in range(m))
                    self.assertEqual(r, d)
                else:
                    y = conecalc.feasibility.strong_separate(rays, d)
                    self.assertEqual(pairing(d, y), -1)
                    self.assertTrue(all(pairing(g, y) >= 0 for g in rays))

    def test_multi_utility_round_trip(self):

        rng = np.random.RandomState(13)
        grids = {2: simplex_grid(2, 15), 3: simplex_grid(3, 4), 4: simplex_grid(4, 3)}
        T = AxiomSet(transitivity=True)

        for i in range(20):
            m = int(rng.randint(2, 5))
            U0 = [tuple(F(int(j)) for j in rng.randint(0, 4, size=m)) for k in range(rng.randint(1, 3))]
            P = PreferenceData(('lotteries', m), realise(U0, 1, m))
            U = conecalc.decision.multi_utility(P, T)
            pairs = list(itertools.product(grids[m], repeat=2))
            self.assertGreaterEqual(len(pairs), 200)
            for n, (p, q) in enumerate(pairs):
                d = conecalc.decision.difference(p, q)
                expect = all(pairing(d, u) >= 0 for u in U0)
                self.assertEqual(all(pairing(d, u) >= 0 for u in U), expect)
                if n < 30:
                    self.assertEqual(conecalc.decision.implied(P, T, p, q) == 'Yes', expect)

    def test_aa_pairing(self):

        rng = np.random.RandomState(14)

        for i in range(100):
            omega_count, m = int(rng.randint(1, 4)), int(rng.randint(2, 4))
            f = Act(omega_count, m, [random_lottery(rng, m) for w in range(omega_count)])
            g = Act(omega_count, m, [random_lottery(rng, m) for w in range(omega_count)])
            u = [[F(int(j)) for j in rng.randint(-3, 4, size=m)] for w in range(omega_count)]
            lhs = pairing(conecalc.decision.aa_vectorize(f, g), tuple(conecalc.convert.flatten(u)))
            rhs = sum(
                conecalc.decision.expectation(f.rows[w], u[w]) - conecalc.decision.expectation(g.rows[w], u[w])
                for w in range(omega_count))
            self.assertEqual(lhs, rhs)

    def test_aa_multi_utility(self):

        rng = np.random.RandomState(15)
        T = AxiomSet(transitivity=True)

        for i in range(5):
            omega_count, m = 2, 2
            U0 = [tuple(F(int(j)) for j in rng.randint(0, 3, size=omega_count * m))]
            P = PreferenceData(('acts', omega_count, m), realise(U0, omega_count, m))
            U = conecalc.decision.multi_utility(P, T)
            for k in range(40):
                f = Act(omega_count, m, [random_lottery(rng, m) for w in range(omega_count)])
                g = Act(omega_count, m, [random_lottery(rng, m) for w in range(omega_count)])
                d = conecalc.decision.aa_vectorize(f, g)
                self.assertEqual(
                    all(pairing(d, u) >= 0 for u in U),
                    all(pairing(d, u) >= 0 for u in U0))


if __name__ == '__main__':

    unittest.main()
