'''Utility matrices u[z][omega] such that "f is weakly preferred to g" is implied
if and only if sum_omega E_f(omega)[u(., omega)] >= sum_omega E_g(omega)[u(., omega)] for every u.
Each matrix is printed with one row per outcome (columns: states).
Requires --transitive.

:usage:

    conecalc_aa_multi_utility [options] <relation.txt>

:arguments:

    <relation.txt>
        Relation file ("acts omega m").

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
from ..decision import aa_multi_utility
from ..linalg import ParseError
from ..linalg import format_vector


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
        U = aa_multi_utility(P, AxiomSet(args.transitive, args.continuous))

        for i, u in enumerate(U):
            print('utility {0:d}'.format(i + 1))
            for row in u:
                print(format_vector(row))

        return detail.finish(args, {'utilities': U})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
