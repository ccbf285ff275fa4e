'''Representation family of a closed planar cone:
the complement is covered by open sectors, each contributing the negated normals of its halfplanes.

:usage:

    conecalc_represent_2d [options] <cone.txt>

:arguments:

    <cone.txt>
        Cone file ("vrep" or "union") in dimension 2.

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
from ..cone import ConeV
from ..cone import UnionConeV
from ..cone import closed_cone_rep_2d
from ..cone import complement_sectors_2d
from ..linalg import ParseError
from ..linalg import UsageError
from ..linalg import format_vector


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

        if not isinstance(C, (ConeV, UnionConeV)):
            raise UsageError('represent-2d needs a "vrep" or "union" cone')

        F = closed_cone_rep_2d(C)
        print(text.format_family(F), end='')

        if args.verbose:
            for s in complement_sectors_2d(C):
                print('open sector {0:s} -> {1:s}'.format(format_vector(s.start), format_vector(s.end)))

        return detail.finish(args, {'whole_space': F.whole_space, 'sets': [list(K) for K in F.sets]})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
