'''Compare the hats of two families on a sample:
for every sample point x, some set of the first family lies in G_x = {y : <x, y> < 0}
if and only if some set of the second does.

:usage:

    conecalc_hat_equal [options] <F1.txt> <F2.txt>

:arguments:

    <F1.txt>, <F2.txt>
        Family files.

:options:

    --sample=arg
        Cone file ("vrep") listing the sample. (default: nonzero points of the grid)

    --nbound=N
        Grid numerator bound. (default: from configuration)

    --dens=arg
        Grid denominators, e.g. "1,2". (default: from configuration)

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

from .. import config
from .. import detail
from ..cone import ConeV
from ..family import hat_equal_on_sample
from ..linalg import ParseError
from ..linalg import UsageError
from ..linalg import format_vector
from ..linalg import is_zero


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument(      '--sample', required=False)
        parser.add_argument(      '--nbound', required=False, type=int)
        parser.add_argument(      '--dens', required=False)
        parser.add_argument('F1')
        parser.add_argument('F2')
        args = parser.parse_args(args)
        conf = detail.settings(args)

        F1 = detail.read_family(args.F1)
        F2 = detail.read_family(args.F2)

        if args.sample:
            S = detail.read_cone(args.sample)
            if not isinstance(S, ConeV):
                raise UsageError('The sample must be a "vrep" file')
            sample = list(S.generators)
        else:
            dens = config.parse_dens(args.dens) if args.dens else None
            grid = config.grid(conf, F1.dim, args.nbound, dens)
            sample = [x for x in grid.points() if not is_zero(x)]

        ret, x = hat_equal_on_sample(F1, F2, sample)
        detail.show_verdict(ret, conf)

        if x is not None:
            print('counterexample {0:s}'.format(format_vector(x)))

        return detail.finish(args, {'equal': ret, 'counterexample': x, 'sample': len(sample)})

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
