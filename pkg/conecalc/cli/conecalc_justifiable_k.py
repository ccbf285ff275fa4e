'''Single set K representing a complete closed cone C existentially:
x belongs to C if and only if <x, y> >= 0 for some y in K.
Printed as a cone file listing K (no vectors: K = {0}, i.e. C is the whole space).

:usage:

    conecalc_justifiable_k [options] <cone.txt>

:arguments:

    <cone.txt>
        Cone file ("vrep" or "union").

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
from ..cone import justifiable_K
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

        if not isinstance(C, (ConeV, UnionConeV)):
            raise UsageError('justifiable-k needs a "vrep" or "union" cone')

        K = justifiable_K(C)
        print(text.format_cone(K), end='')

        return detail.finish(args, {'K': list(K.generators)})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
