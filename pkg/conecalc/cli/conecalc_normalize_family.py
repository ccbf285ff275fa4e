'''Normalise a family: drop trivial sets, replace every other set by the extreme rays of its conic hull.
The represented cone does not change.

:usage:

    conecalc_normalize_family [options] <family.txt>

:arguments:

    <family.txt>
        Family file.

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
from ..family import normalize_family
from ..linalg import ParseError


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument('family')
        args = parser.parse_args(args)

        F = normalize_family(detail.read_family(args.family))
        print(text.format_family(F), end='')

        return detail.finish(args, {'whole_space': F.whole_space, 'sets': [list(K) for K in F.sets]})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
