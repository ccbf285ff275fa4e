'''Check if a vector belongs to the cone represented by a family:
every set contains some y with <x, y> >= 0.

:usage:

    conecalc_family_member [options] <family.txt> <x>

:arguments:

    <family.txt>
        Family file.

    <x>
        The vector: inline, e.g. "(1,0)", or a file holding one vector.

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
from ..family import family_member
from ..linalg import ParseError


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument('family')
        parser.add_argument('x')
        args = parser.parse_args(args)
        conf = detail.settings(args)

        F = detail.read_family(args.family)
        ret = family_member(F, text.vector_argument(args.x))
        detail.show_verdict(ret, conf)

        return detail.finish(args, {'member': ret})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
