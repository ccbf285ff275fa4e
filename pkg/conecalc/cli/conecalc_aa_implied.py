'''Decide if "f is weakly preferred to g" follows from preference data over acts:
prints "Yes", "No", or "Undetermined".
Reflexivity and independence are always assumed.

:usage:

    conecalc_aa_implied [options] <relation.txt> <f> <g>

:arguments:

    <relation.txt>
        Relation file ("acts omega m").

    <f>, <g>
        Acts: one lottery per state separated by ";", e.g. "(1,0);(0,1)".

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
from ..decision import aa_implied
from ..linalg import ParseError


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
        parser.add_argument('f')
        parser.add_argument('g')
        args = parser.parse_args(args)
        conf = detail.settings(args)

        P = detail.read_relation(args.relation)
        A = AxiomSet(args.transitive, args.continuous)

        if P.ground[0] != 'acts':
            raise ParseError('aa-implied needs a relation file over acts')

        f = text.parse_object(args.f, P.ground)
        g = text.parse_object(args.g, P.ground)
        ret = aa_implied(P, A, f, g)
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
