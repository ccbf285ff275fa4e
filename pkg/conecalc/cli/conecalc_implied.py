'''Decide if "p is weakly preferred to q" follows from preference data over lotteries:
prints "Yes", "No", or "Undetermined".
Reflexivity and independence are always assumed.

:usage:

    conecalc_implied [options] <relation.txt> <p> <q>

:arguments:

    <relation.txt>
        Relation file ("lotteries m").

    <p>, <q>
        Lotteries, e.g. "(1/2, 1/2, 0)".

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
from .. import text
from ..decision import AxiomSet
from ..decision import implied
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
        parser.add_argument('p')
        parser.add_argument('q')
        args = parser.parse_args(args)
        conf = detail.settings(args)

        P = detail.read_relation(args.relation)

        if P.ground[0] != 'lotteries':
            raise UsageError('implied needs lottery data, use aa-implied for acts')

        A = AxiomSet(args.transitive, args.continuous)
        p = text.parse_object(args.p, P.ground)
        q = text.parse_object(args.q, P.ground)
        ret = implied(P, A, p, q)
        detail.show_verdict(ret, conf)

        return detail.finish(args, {'verdict': ret, 'axioms': A.names()})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
