'''Check if a cone is complete: every vector or its opposite belongs to the cone.

:usage:

    conecalc_complete [options] <cone.txt>

:arguments:

    <cone.txt>
        Cone file ("vrep", "hrep", or "union").

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
from ..cone import OpenConeH
from ..cone import is_complete
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
        conf = detail.settings(args)

        C = detail.read_cone(args.cone)

        if isinstance(C, OpenConeH):
            raise UsageError('complete needs a closed cone ("vrep", "hrep", or "union")')

        ret = is_complete(C)
        detail.show_verdict(ret, conf)

        return detail.finish(args, {'complete': ret})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
