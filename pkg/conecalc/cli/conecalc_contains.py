'''Check if the second cone is contained in the first.

:usage:

    conecalc_contains [options] <C.txt> <D.txt>

:arguments:

    <C.txt>
        Cone file ("vrep" or "hrep").

    <D.txt>
        Cone file ("vrep" or "hrep"). Prints "true" if D is a subset of C.

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
from ..cone import ConeH
from ..cone import ConeV
from ..cone import contains
from ..cone import to_vrep
from ..linalg import ParseError
from ..linalg import UsageError


def as_vrep(C):

    if isinstance(C, ConeH):
        return to_vrep(C)

    if not isinstance(C, ConeV):
        raise UsageError('A closed convex cone ("vrep" or "hrep") is required')

    return C


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument('C')
        parser.add_argument('D')
        args = parser.parse_args(args)
        conf = detail.settings(args)

        C = as_vrep(detail.read_cone(args.C))
        D = as_vrep(detail.read_cone(args.D))
        ret = contains(C, D)
        detail.show_verdict(ret, conf)

        return detail.finish(args, {'contains': ret})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
