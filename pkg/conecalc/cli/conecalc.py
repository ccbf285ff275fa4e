'''Exact convex-cone calculus.

:usage:

    conecalc <command> [options] [arguments]

:commands:

    dual                Dual cone.
    member              Membership of a vector.
    contains            Containment of two cones.
    bipolar-check       Bipolar identity.
    complete            Completeness of a cone.
    separate            Strong separation of a point.
    lemma-witness       Witness for a point outside the conic hull of two vectors.
    trivial             Triviality of a set of dual vectors.
    family-member       Membership in the cone represented by a family.
    normalize-family    Normal form of a family.
    hat-equal           Hat comparison of two families on a sample.
    represent-2d        Representation family of a closed planar cone.
    justifiable-k       Single-set existential representation of a complete cone.
    evren-check         Sub-cone comparison through dual cones.
    implied             Implied preference over lotteries.
    multi-utility       Multi-utility representation over lotteries.
    transitivity-cert   Convexity of the asserted rays.
    aa-implied          Implied preference over acts.
    aa-multi-utility    Multi-utility representation over acts.
    oracle-compare      Brute-force grid check.

    Use "conecalc <command> --help" for the options of each command.
    Exit status: 0 on success, 1 on domain error, 2 on parse error.

:options:

    -h, --help
        Show help.

    -v, --version
        Show version.

(c - MIT) conecalc developers
'''

import importlib
import sys

from .. import version

COMMANDS = [
    'dual',
    'member',
    'contains',
    'bipolar-check',
    'complete',
    'separate',
    'lemma-witness',
    'trivial',
    'family-member',
    'normalize-family',
    'hat-equal',
    'represent-2d',
    'justifiable-k',
    'evren-check',
    'implied',
    'multi-utility',
    'transitivity-cert',
    'aa-implied',
    'aa-multi-utility',
    'oracle-compare',
]


def main(args=None):

    args = sys.argv[1:] if args is None else list(args)

    if len(args) == 0 or args[0] in ['-h', '--help']:
        print(__doc__)
        return 0

    if args[0] in ['-v', '--version']:
        print(version)
        return 0

    if args[0] not in COMMANDS:
        print('Unknown command "{0:s}", see "conecalc --help"'.format(args[0]))
        return 2

    module = importlib.import_module('conecalc.cli.conecalc_' + args[0].replace('-', '_'))

    return module.main(args[1:])


if __name__ == '__main__':

    sys.exit(main())
