'''Check the bipolar identity: the dual of the dual cone equals the cone.

:usage:

    conecalc_bipolar_check [options] <cone.txt>

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
from ..cone import bipolar_check
from ..cone import dual_cone
from ..linalg import ParseError
from .conecalc_contains import as_vrep


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

        C = as_vrep(detail.read_cone(args.cone))
        ret = bipolar_check(C)
        detail.show_verdict(ret, conf)

        if args.verbose:
            print(text.format_cone(dual_cone(dual_cone(C))), end='')

        return detail.finish(args, {'bipolar': ret})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
