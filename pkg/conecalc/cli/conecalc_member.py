'''Check if a vector belongs to a cone.

:usage:

    conecalc_member [options] <cone.txt> <x>

:arguments:

    <cone.txt>
        Cone file ("vrep", "hrep", "open", or "union").

    <x>
        The vector: inline, e.g. "(1,0,0)", or a file holding one vector.

:options:

    --interior
        Check interior membership instead (full-dimensional "vrep" cone only).

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
from ..cone import OpenConeH
from ..cone import conic_combination
from ..cone import in_hrep
from ..cone import in_union
from ..cone import interior_member
from ..cone import open_cone_member
from ..linalg import ParseError
from ..linalg import UsageError
from ..linalg import format_rational
from ..linalg import format_vector


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument(      '--interior', required=False, action='store_true')
        parser.add_argument('cone')
        parser.add_argument('x')
        args = parser.parse_args(args)
        conf = detail.settings(args)

        C = detail.read_cone(args.cone)
        x = text.vector_argument(args.x)
        report = {}

        if args.interior:
            if not isinstance(C, ConeV):
                raise UsageError('--interior needs a "vrep" cone')
            ret = interior_member(C, x)
        elif isinstance(C, ConeV):
            lam = conic_combination(C, x)
            ret = lam is not None
            if ret:
                report['multipliers'] = list(lam)
        elif isinstance(C, ConeH):
            ret = in_hrep(C, x)
        elif isinstance(C, OpenConeH):
            ret = open_cone_member(C, x)
        else:
            ret = in_union(C, x)

        detail.show_verdict(ret, conf)

        if args.verbose and 'multipliers' in report:
            for g, l in zip(C.generators, report['multipliers']):
                print('{0:s} * {1:s}'.format(format_rational(l), format_vector(g)))

        report['member'] = ret

        return detail.finish(args, report)

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
