'''Check if a set of dual vectors is trivial: every x pairs nonnegatively with some element.
If not, print a witness x pairing negatively with every element.

:usage:

    conecalc_trivial [options] <set.txt>

:arguments:

    <set.txt>
        Cone file ("vrep") listing the set (no vectors: the set {0}).

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
from ..cone import ConeV
from ..family import is_trivial
from ..linalg import ParseError
from ..linalg import UsageError
from ..linalg import format_vector
from ..linalg import zero


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument('set')
        args = parser.parse_args(args)
        conf = detail.settings(args)

        C = detail.read_cone(args.set)

        if not isinstance(C, ConeV):
            raise UsageError('trivial needs a "vrep" file')

        K = list(C.generators) if len(C.generators) > 0 else [zero(C.dim)]
        ret, witness = is_trivial(K)
        detail.show_verdict(ret, conf)

        if witness is not None:
            print('witness {0:s}'.format(format_vector(witness)))

        return detail.finish(args, {'trivial': ret, 'witness': witness})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
