'''Strongly separate a point from a cone:
print y with <g, y> >= 0 for every generator g and <x0, y> = -1.

:usage:

    conecalc_separate [options] <cone.txt> <x0>

:arguments:

    <cone.txt>
        Cone file ("vrep" or "hrep").

    <x0>
        Point outside the cone: inline, e.g. "(1,0,0)", or a file holding one vector.

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
from .. import text
from ..feasibility import strong_separate
from ..linalg import ParseError
from ..linalg import format_rational
from ..linalg import format_vector
from ..linalg import pairing
from .conecalc_contains import as_vrep


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument('cone')
        parser.add_argument('x0')
        args = parser.parse_args(args)

        C = as_vrep(detail.read_cone(args.cone))
        x0 = text.vector_argument(args.x0)
        y = strong_separate(C, x0)
        print(format_vector(y))

        if args.verbose:
            for g in C.generators:
                print('<{0:s}, y> = {1:s}'.format(format_vector(g), format_rational(pairing(g, y))))
            print('<{0:s}, y> = {1:s}'.format(format_vector(x0), format_rational(pairing(x0, y))))

        return detail.finish(args, {'separator': y})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
