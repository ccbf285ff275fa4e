'''Utility vectors u (one per line) such that "p is weakly preferred to q" is implied
if and only if E_p[u] >= E_q[u] for every u.
Utilities are defined up to a constant and printed with minimal coordinate 0.
Requires --transitive.

:usage:

    conecalc_multi_utility [options] <relation.txt>

:arguments:

    <relation.txt>
        Relation file ("lotteries m").

:options:

    --transitive
        Assume transitivity.

    --continuous
        Assume continuity (recorded; no effect on finitely generated data).

    --config=arg
        YAML configuration file (merged over the defaults).

    --colors=arg
        Color theme: "none" or "dark". (default: from configuration)

    --format=arg
        Output format, only "text". (default: text)

    -o, --output=arg
        Also write the result to a YAML file.

    -f, --force
        Overwrite output file without prompt.

    --verbose
        Print certificates.

    -h, --help
        Show help.

    --version
        Show version.

(c - MIT) conecalc developers
'''

import argparse
import sys

from .. import detail
from ..decision import AxiomSet
from ..decision import multi_utility
from ..linalg import ParseError
from ..linalg import UsageError


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument(      '--transitive', required=False, action='store_true')
        parser.add_argument(      '--continuous', required=False, action='store_true')
        parser.add_argument('relation')
        args = parser.parse_args(args)

        P = detail.read_relation(args.relation)

        if P.ground[0] != 'lotteries':
            raise UsageError('multi-utility needs lottery data, use aa-multi-utility for acts')

        U = multi_utility(P, AxiomSet(args.transitive, args.continuous))
        detail.show_vectors(U)

        return detail.finish(args, {'utilities': U})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
