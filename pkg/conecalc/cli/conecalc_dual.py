'''Compute the dual cone: all vectors pairing nonnegatively with every element of the cone.
The result is printed as a cone file (minimal generators, sorted).

:usage:

    conecalc_dual [options] <cone.txt>

:arguments:

    <cone.txt>
        Cone file ("vrep" or "hrep").

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
from ..cone import ConeH
from ..cone import ConeV
from ..cone import canonical
from ..cone import dual_cone
from ..linalg import ParseError
from ..linalg import UsageError


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument('cone')
        args = parser.parse_args(args)

        C = detail.read_cone(args.cone)

        if isinstance(C, ConeV):
            D = dual_cone(C)
        elif isinstance(C, ConeH):
            D = canonical(ConeV(C.dim, C.normals))
        else:
            raise UsageError('dual needs a closed convex cone ("vrep" or "hrep")')

        print(text.format_cone(D), end='')

        return detail.finish(args, {'dim': D.dim, 'generators': list(D.generators)})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
