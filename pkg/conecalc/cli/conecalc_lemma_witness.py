'''Construct y with <c, y> < 0, <a, y> >= 0, <b, y> >= 0,
for c outside the conic hull of a and b.
Prints the case, the witness, and the three pairings.

:usage:

    conecalc_lemma_witness [options] <a> <b> <c>

:arguments:

    <a>, <b>, <c>
        Nonzero vectors: inline, e.g. "(1,0,0)", or files holding one vector.

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
from ..cone import lemma_case
from ..cone import lemma_witness
from ..linalg import ParseError
from ..linalg import format_rational
from ..linalg import format_vector
from ..linalg import pairing


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument('a')
        parser.add_argument('b')
        parser.add_argument('c')
        args = parser.parse_args(args)

        a, b, c = [text.vector_argument(i) for i in [args.a, args.b, args.c]]
        y = lemma_witness(a, b, c)
        case = lemma_case(a, b, c)
        pairings = {name: pairing(v, y) for name, v in zip(['a', 'b', 'c'], [a, b, c])}

        print('case: {0:s}'.format(case))
        print('y = {0:s}'.format(format_vector(y)))

        for name in ['a', 'b', 'c']:
            print('<{0:s}, y> = {1:s}'.format(name, format_rational(pairings[name])))

        return detail.finish(args, {'case': case, 'witness': y, 'pairings': pairings})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
