'''Decide if the union of the asserted rays (the relation without transitive closure) is convex.
If not, print two rays a and b, a combination c = k a + l b on no asserted ray,
and for every asserted ray r a functional y with <c, y> < 0 <= <r, y>.

:usage:

    conecalc_transitivity_cert [options] <relation.txt>

:arguments:

    <relation.txt>
        Relation file.

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
from ..decision import Convex
from ..decision import transitivity_certificate
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
        parser.add_argument('relation')
        args = parser.parse_args(args)

        P = detail.read_relation(args.relation)
        cert = transitivity_certificate(P)

        if isinstance(cert, Convex):
            print('Convex')
            return detail.finish(args, {'convex': True})

        k, l = cert.coefficients
        print('Not convex')
        print('a = {0:s}'.format(format_vector(cert.a)))
        print('b = {0:s}'.format(format_vector(cert.b)))
        print('c = {0:d} a + {1:d} b = {2:s}'.format(k, l, format_vector(cert.combination)))

        for r, y in cert.functionals:
            print('ray {0:s}: y = {1:s}'.format(format_vector(r), format_vector(y)))
            if args.verbose:
                print('    <c, y> = {0:s}, <r, y> = {1:s}'.format(
                    format_rational(pairing(cert.combination, y)), format_rational(pairing(r, y))))

        return detail.finish(args, {
            'convex': False,
            'a': cert.a,
            'b': cert.b,
            'coefficients': list(cert.coefficients),
            'combination': cert.combination,
            'functionals': [{'ray': r, 'y': y} for r, y in cert.functionals]})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
