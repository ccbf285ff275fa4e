'''For sub-cones A, B of the span D of C:
check that "A is a subset of B" agrees with "the dual of B within D is a subset of the dual of A within D".

:usage:

    conecalc_evren_check [options] <A.txt> <B.txt> <C.txt>

:arguments:

    <A.txt>, <B.txt>, <C.txt>
        Cone files ("vrep" or "hrep").

:options:

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
from ..cone import evren_check
from ..linalg import ParseError
from .conecalc_contains import as_vrep


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument('A')
        parser.add_argument('B')
        parser.add_argument('C')
        args = parser.parse_args(args)
        conf = detail.settings(args)

        A, B, C = [as_vrep(detail.read_cone(i)) for i in [args.A, args.B, args.C]]
        ret = evren_check(A, B, C)
        detail.show_verdict(ret, conf)

        return detail.finish(args, {'agree': ret})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
