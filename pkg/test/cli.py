import unittest
import contextlib
import io
import os
import shutil
import subprocess
import sys
import tempfile

import conecalc
from conecalc.cli import conecalc as dispatch
from conecalc.cli import conecalc_aa_implied
from conecalc.cli import conecalc_aa_multi_utility
from conecalc.cli import conecalc_bipolar_check
from conecalc.cli import conecalc_complete
from conecalc.cli import conecalc_contains
from conecalc.cli import conecalc_dual
from conecalc.cli import conecalc_evren_check
from conecalc.cli import conecalc_family_member
from conecalc.cli import conecalc_hat_equal
from conecalc.cli import conecalc_implied
from conecalc.cli import conecalc_justifiable_k
from conecalc.cli import conecalc_lemma_witness
from conecalc.cli import conecalc_member
from conecalc.cli import conecalc_multi_utility
from conecalc.cli import conecalc_normalize_family
from conecalc.cli import conecalc_oracle_compare
from conecalc.cli import conecalc_represent_2d
from conecalc.cli import conecalc_separate
from conecalc.cli import conecalc_transitivity_cert
from conecalc.cli import conecalc_trivial

root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def call(main, args):
    r'''
Run a tool in-process, return ``(exit status, stdout)``.
    '''

    out = io.StringIO()

    with contextlib.redirect_stdout(out):
        ret = main(args)

    return ret, out.getvalue()


def run(args):
    r'''
Run the dispatcher in a subprocess, return ``(exit status, stdout)``.
    '''

    ret = subprocess.run(
        [sys.executable, '-m', 'conecalc.cli.conecalc'] + args,
        cwd=root, stdout=subprocess.PIPE, universal_newlines=True)

    return ret.returncode, ret.stdout


class Test_cli(unittest.TestCase):

    def setUp(self):

        self.dirname = tempfile.mkdtemp()

    def tearDown(self):

        shutil.rmtree(self.dirname)

    def write(self, name, content):

        filename = os.path.join(self.dirname, name)

        with open(filename, 'w') as file:
            file.write(content)

        return filename

    def test_dual(self):

        cone = self.write('cone.txt', 'dim 2\nvrep\n2 1\n1 2\n')
        self.assertEqual(call(conecalc_dual.main, [cone]), (0, 'dim 2\nvrep\n-1 2\n2 -1\n'))

        hrep = self.write('hrep.txt', 'dim 2\nhrep\n1 0\n0 1\n')
        self.assertEqual(call(conecalc_dual.main, [hrep]), (0, 'dim 2\nvrep\n0 1\n1 0\n'))

    def test_dual_output(self):

        cone = self.write('cone.txt', 'dim 2\nvrep\n1 0\n0 1\n')
        output = os.path.join(self.dirname, 'out', 'dual.yaml')

        ret, out = call(conecalc_dual.main, ['-f', '-o', output, cone])

        self.assertEqual(ret, 0)
        self.assertEqual(conecalc.yaml.read(output), {'dim': 2, 'generators': [['0', '1'], ['1', '0']]})

    def test_parse_error(self):

        cone = self.write('cone.txt', 'dim two\nvrep\n1 0\n')

        ret, out = call(conecalc_dual.main, [cone])
        self.assertEqual(ret, 2)
        self.assertIn('positive integer', out)

        ret, out = call(conecalc_dual.main, [os.path.join(self.dirname, 'missing.txt')])
        self.assertEqual(ret, 2)

    def test_member(self):

        cone = self.write('cone.txt', 'dim 2\nvrep\n1 0\n0 1\n')

        self.assertEqual(call(conecalc_member.main, [cone, '(2,3)']), (0, 'true\n'))
        self.assertEqual(call(conecalc_member.main, [cone, '(-1,0)']), (0, 'false\n'))
        self.assertEqual(call(conecalc_member.main, ['--interior', cone, '(1,0)']), (0, 'false\n'))
        self.assertEqual(
            call(conecalc_member.main, ['--verbose', cone, '(2,3)']),
            (0, 'true\n3 * (0, 1)\n2 * (1, 0)\n'))

    def test_member_colors(self):

        cone = self.write('cone.txt', 'dim 2\nvrep\n1 0\n0 1\n')
        ret, out = call(conecalc_member.main, ['--colors', 'dark', cone, '(1,1)'])

        self.assertEqual(out, '\x1b[1;32mtrue\x1b[0m\n')

    def test_complete(self):

        halfplane = self.write('h.txt', 'dim 2\nhrep\n1 0\n')
        orthant = self.write('o.txt', 'dim 2\nhrep\n1 0\n0 1\n')

        self.assertEqual(call(conecalc_complete.main, [halfplane]), (0, 'true\n'))
        self.assertEqual(call(conecalc_complete.main, [orthant]), (0, 'false\n'))

    def test_separate(self):

        cone = self.write('cone.txt', 'dim 2\nvrep\n1 0\n0 1\n')

        ret, out = call(conecalc_separate.main, [cone, '(1,1)'])
        self.assertEqual(ret, 1)
        self.assertIn('hypothesis violated', out)

        ret, out = call(conecalc_separate.main, [cone, '(-1,-1)'])
        self.assertEqual(ret, 0)

    def test_lemma_witness(self):

        ret, out = call(conecalc_lemma_witness.main, ['(1,0)', '(0,1)', '(-1,-1)'])

        self.assertEqual(ret, 0)
        self.assertEqual(out, 'case: ii\ny = (1, 1)\n<a, y> = 1\n<b, y> = 1\n<c, y> = -2\n')

        ret, out = call(conecalc_lemma_witness.main, ['(1,0)', '(0,1)', '(1,1)'])
        self.assertEqual(ret, 1)
        self.assertIn('hypothesis violated', out)

    def test_trivial(self):

        K = self.write('k.txt', 'dim 2\nvrep\n1 0\n-1 0\n')
        self.assertEqual(call(conecalc_trivial.main, [K]), (0, 'true\n'))

        K = self.write('k.txt', 'dim 2\nvrep\n1 0\n')
        ret, out = call(conecalc_trivial.main, [K])
        self.assertEqual(ret, 0)
        self.assertTrue(out.startswith('false\nwitness ('))

    def test_family(self):

        family = self.write('f.txt', 'dim 2\nfamily 2\nset 1\n1 0\nset 1\n0 1\n')
        other = self.write('g.txt', 'dim 2\nfamily 1\nset 2\n1 0\n0 1\n')

        self.assertEqual(call(conecalc_family_member.main, [family, '(1,-1)']), (0, 'false\n'))
        self.assertEqual(call(conecalc_family_member.main, [other, '(1,-1)']), (0, 'true\n'))

        ret, out = call(conecalc_hat_equal.main, ['--nbound', '2', '--dens', '1', family, other])
        self.assertEqual(ret, 0)
        self.assertTrue(out.startswith('false\ncounterexample ('))

    def test_represent_2d(self):

        cone = self.write('c.txt', 'dim 2\nvrep\n-1 0\n0 1\n1 0\n')
        self.assertEqual(call(conecalc_represent_2d.main, [cone]), (0, 'dim 2\nfamily 1\nset 1\n0 1\n'))

        plane = self.write('p.txt', 'dim 2\nvrep\n-1 0\n0 -1\n0 1\n1 0\n')
        self.assertEqual(call(conecalc_represent_2d.main, [plane]), (0, 'dim 2\nwholespace\n'))

    def test_justifiable_k(self):

        cone = self.write('c.txt', 'dim 2\nvrep\n1 0\n0 1\n0 -1\n')
        self.assertEqual(call(conecalc_justifiable_k.main, [cone]), (0, 'dim 2\nvrep\n1 0\n'))

        orthant = self.write('o.txt', 'dim 2\nvrep\n1 0\n0 1\n')
        ret, out = call(conecalc_justifiable_k.main, [orthant])
        self.assertEqual(ret, 1)
        self.assertIn('axiom violated', out)

    def test_implied(self):

        relation = self.write('r.txt', 'lotteries 3\npref: (1, 0, 0) | (0, 1, 0)\npref: (0, 1, 0) | (0, 0, 1)\n')

        self.assertEqual(call(conecalc_implied.main, [relation, '(1,0,0)', '(0,0,1)']), (0, 'Undetermined\n'))
        self.assertEqual(
            call(conecalc_implied.main, ['--transitive', relation, '(1,0,0)', '(0,0,1)']),
            (0, 'Yes\n'))

        self.assertEqual(
            call(conecalc_multi_utility.main, ['--transitive', relation]),
            (0, '(1, 0, 0)\n(1, 1, 0)\n'))

        ret, out = call(conecalc_multi_utility.main, [relation])
        self.assertEqual(ret, 1)
        self.assertIn('requires transitivity', out)

    def test_transitivity_cert(self):

        relation = self.write('r.txt', 'lotteries 3\npref: (1, 0, 0) | (0, 1, 0)\npref: (0, 1, 0) | (0, 0, 1)\n')
        ret, out = call(conecalc_transitivity_cert.main, [relation])

        self.assertEqual(ret, 0)
        self.assertEqual(out.splitlines()[:4], [
            'Not convex',
            'a = (0, 1, -1)',
            'b = (1, -1, 0)',
            'c = 1 a + 1 b = (1, 0, -1)'])

        relation = self.write('s.txt', 'lotteries 2\npref: (1, 0) | (0, 1)\n')
        self.assertEqual(call(conecalc_transitivity_cert.main, [relation]), (0, 'Convex\n'))

    def test_aa_multi_utility(self):

        relation = self.write('r.txt', 'acts 2 2\npref: (1, 0); (0, 1) | (0, 1); (0, 1)\n')
        ret, out = call(conecalc_aa_multi_utility.main, ['--transitive', relation])

        self.assertEqual(ret, 0)
        self.assertEqual(out.count('utility'), 3)

    def test_oracle_compare(self):

        cone = self.write('cone.txt', 'dim 2\nvrep\n1 0\n0 1\n')
        K = self.write('k.txt', 'dim 2\nvrep\n1 0\n-1 0\n')

        self.assertEqual(
            call(conecalc_oracle_compare.main, ['-q', '--nbound', '3', '--dens', '1,2', 'membership', cone]),
            (0, 'agree on 169 points\n'))

        self.assertEqual(
            call(conecalc_oracle_compare.main, ['-q', '--nbound', '4', '--dens', '1', 'triviality', K]),
            (0, 'necessary-direction pass: all 81 points satisfied\n'))

    def test_oracle_compare_config(self):

        cone = self.write('cone.txt', 'dim 2\nvrep\n1 0\n0 1\n')
        conf = self.write('config.yaml', 'grid:\n  nbound: 3\n  dens: [1, 2]\n')

        self.assertEqual(
            call(conecalc_oracle_compare.main, ['-q', '--config', conf, 'membership', cone]),
            (0, 'agree on 169 points\n'))

    def test_contains(self):

        orthant = self.write('o.txt', 'dim 2\nvrep\n1 0\n0 1\n')
        narrow = self.write('n.txt', 'dim 2\nvrep\n2 1\n1 2\n')
        hrep = self.write('h.txt', 'dim 2\nhrep\n1 0\n0 1\n')
        line = self.write('l.txt', 'dim 3\nvrep\n1 0 0\n')
        bad = self.write('bad.txt', 'dim 2\nvrep\n1\n')

        self.assertEqual(call(conecalc_contains.main, [orthant, narrow]), (0, 'true\n'))
        self.assertEqual(call(conecalc_contains.main, [narrow, orthant]), (0, 'false\n'))
        self.assertEqual(call(conecalc_contains.main, [hrep, narrow]), (0, 'true\n'))
        self.assertEqual(call(conecalc_contains.main, [orthant, line])[0], 1)
        self.assertEqual(call(conecalc_contains.main, [orthant, bad])[0], 2)

    def test_bipolar_check(self):

        orthant = self.write('o.txt', 'dim 2\nvrep\n1 0\n0 1\n')
        opened = self.write('u.txt', 'dim 2\nopen\n1 0\n')

        self.assertEqual(call(conecalc_bipolar_check.main, [orthant]), (0, 'true\n'))
        self.assertEqual(
            call(conecalc_bipolar_check.main, ['--verbose', orthant]),
            (0, 'true\ndim 2\nvrep\n0 1\n1 0\n'))

        ret, out = call(conecalc_bipolar_check.main, [opened])
        self.assertEqual(ret, 1)
        self.assertIn('closed convex cone', out)

    def test_normalize_family(self):

        family = self.write('f.txt', 'dim 2\nfamily 2\nset 2\n1 0\n2 0\nset 2\n1 0\n-1 0\n')
        trivial = self.write('t.txt', 'dim 2\nfamily 1\nset 2\n1 0\n-1 0\n')
        bad = self.write('bad.txt', 'dim 2\nfamily 1\nset x\n')

        self.assertEqual(call(conecalc_normalize_family.main, [family]), (0, 'dim 2\nfamily 1\nset 1\n1 0\n'))
        self.assertEqual(call(conecalc_normalize_family.main, [trivial]), (0, 'dim 2\nwholespace\n'))
        self.assertEqual(call(conecalc_normalize_family.main, [bad])[0], 2)

    def test_evren_check(self):

        A = self.write('a.txt', 'dim 2\nvrep\n1 0\n')
        B = self.write('b.txt', 'dim 2\nvrep\n1 0\n0 1\n')
        line = self.write('c.txt', 'dim 2\nvrep\n1 0\n-1 0\n')

        self.assertEqual(call(conecalc_evren_check.main, [A, B, B]), (0, 'true\n'))
        self.assertEqual(call(conecalc_evren_check.main, [B, A, B]), (0, 'true\n'))

        ret, out = call(conecalc_evren_check.main, [A, B, line])
        self.assertEqual(ret, 1)
        self.assertIn('hypothesis violated', out)

    def test_aa_implied(self):

        relation = self.write('r.txt', 'acts 2 2\npref: (1, 0); (0, 1) | (0, 1); (0, 1)\n')
        denied = self.write('s.txt', (
            'acts 2 2\npref: (1, 0); (0, 1) | (0, 1); (0, 1)\nnpref: (0, 1); (1, 0) | (0, 1); (0, 1)\n'))
        lotteries = self.write('l.txt', 'lotteries 2\npref: (1, 0) | (0, 1)\n')

        self.assertEqual(call(conecalc_aa_implied.main, [relation, '(1,0);(0,1)', '(0,1);(0,1)']), (0, 'Yes\n'))
        self.assertEqual(
            call(conecalc_aa_implied.main, [relation, '(0,1);(0,1)', '(1,0);(0,1)']),
            (0, 'Undetermined\n'))
        self.assertEqual(
            call(conecalc_aa_implied.main, [denied, '(0,1);(1,0)', '(0,1);(0,1)']),
            (0, 'No\n'))
        self.assertEqual(call(conecalc_aa_implied.main, [lotteries, '(1,0)', '(0,1)'])[0], 2)
        self.assertEqual(call(conecalc_aa_implied.main, [relation, '(1,0)', '(0,1);(0,1)'])[0], 1)

    def test_argparse(self):

        with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                conecalc_dual.main([])

        self.assertEqual(cm.exception.code, 2)

    def test_dispatch(self):

        cone = self.write('cone.txt', 'dim 2\nvrep\n1 0\n0 1\n')

        self.assertEqual(call(dispatch.main, ['dual', cone]), (0, 'dim 2\nvrep\n0 1\n1 0\n'))
        self.assertEqual(call(dispatch.main, ['foo'])[0], 2)

        ret, out = call(dispatch.main, ['--help'])
        self.assertEqual(ret, 0)
        self.assertIn('oracle-compare', out)

    def test_subprocess(self):

        cone = self.write('cone.txt', 'dim 2\nvrep\n2 1\n1 2\n')
        bad = self.write('bad.txt', 'dim 2\nvrep\n1 0 0\n')

        self.assertEqual(run(['dual', cone]), (0, 'dim 2\nvrep\n-1 2\n2 -1\n'))
        self.assertEqual(run(['member', cone, '(1,1)']), (0, 'true\n'))
        self.assertEqual(run(['dual', bad])[0], 2)

        orthant = self.write('o.txt', 'dim 2\nvrep\n1 0\n0 1\n')
        line = self.write('l.txt', 'dim 2\nvrep\n1 0\n-1 0\n')
        family = self.write('f.txt', 'dim 2\nfamily 1\nset 2\n1 0\n2 0\n')
        relation = self.write('r.txt', 'acts 2 2\npref: (1, 0); (0, 1) | (0, 1); (0, 1)\n')

        self.assertEqual(run(['contains', orthant, cone]), (0, 'true\n'))
        self.assertEqual(run(['bipolar-check', cone]), (0, 'true\n'))
        self.assertEqual(run(['normalize-family', family]), (0, 'dim 2\nfamily 1\nset 1\n1 0\n'))
        self.assertEqual(run(['evren-check', cone, orthant, orthant]), (0, 'true\n'))
        self.assertEqual(run(['evren-check', cone, orthant, line])[0], 1)
        self.assertEqual(run(['aa-implied', relation, '(1,0);(0,1)', '(0,1);(0,1)']), (0, 'Yes\n'))
        self.assertEqual(run(['aa-implied', relation, '(1,0)', '(0,1)'])[0], 1)
        self.assertEqual(run(['normalize-family', bad])[0], 2)


if __name__ == '__main__':

    unittest.main()
