'''Compare a fast exact procedure with its brute-force definition over a rational grid.
Exits 1 if any disagreement is found.

:usage:

    conecalc_oracle_compare [options] <task> <instance.txt> [<family.txt>]

:arguments:

    <task>
        One of:
        *   membership: <instance.txt> is a cone file ("vrep" or "hrep").
        *   triviality: <instance.txt> is a cone file ("vrep") listing the set.
        *   feasibility: <instance.txt> is a system file.
        *   family-membership: <instance.txt> is a cone file ("vrep" or "hrep"),
            compared with <family.txt> (default: the dual-generator singletons).
        *   implied: <instance.txt> is a relation file, compared on the grid of differences.

:options:

    --nbound=N
        Grid numerator bound. (default: from configuration)

    --dens=arg
        Grid denominators, e.g. "1,2". (default: from configuration)

    --transitive
        Assume transitivity (task "implied").

    --continuous
        Assume continuity (task "implied").

    -q, --quiet
        Do not print progress.

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
from ..cone import ConeH
from ..cone import ConeV
from ..cone import to_vrep
from ..decision import AxiomSet
from ..linalg import ParseError
from ..linalg import UsageError
from ..oracle import TASKS
from ..oracle import oracle_compare


def main(args=None):

    try:

        class Parser(argparse.ArgumentParser):
            def print_help(self):
                print(__doc__)

        parser = Parser()
        detail.add_common(parser)
        parser.add_argument(      '--nbound', required=False, type=int)
        parser.add_argument(      '--dens', required=False)
        parser.add_argument(      '--transitive', required=False, action='store_true')
        parser.add_argument(      '--continuous', required=False, action='store_true')
        parser.add_argument('-q', '--quiet', required=False, action='store_true')
        parser.add_argument('task', choices=TASKS)
        parser.add_argument('instance')
        parser.add_argument('family', nargs='?')
        args = parser.parse_args(args)
        conf = detail.settings(args)
        dens = config.parse_dens(args.dens) if args.dens else None

        if args.task == 'feasibility':
            instance = detail.read_system(args.instance)
            dim = instance.dim
        elif args.task == 'implied':
            P = detail.read_relation(args.instance)
            instance = (P, AxiomSet(args.transitive, args.continuous))
            dim = P.dim
        else:
            C = detail.read_cone(args.instance)
            if isinstance(C, ConeH):
                C = to_vrep(C)
            if not isinstance(C, ConeV):
                raise UsageError('{0:s} needs a "vrep" or "hrep" cone'.format(args.task))
            dim = C.dim
            instance = C
            if args.task == 'family-membership':
                F = detail.read_family(args.family) if args.family else None
                instance = (F, C)

        grid = config.grid(conf, dim, args.nbound, dens)
        report = oracle_compare(args.task, instance, grid, quiet=args.quiet)
        print(report['message'])

        if args.verbose:
            for x in report['disagreements']:
                print(x)

        detail.finish(args, report)

        return 1 if len(report['disagreements']) > 0 else 0

    except ParseError as e:

        print(e)
        return 2

    except Exception as e:

        print(e)
        return 1


if __name__ == '__main__':

    sys.exit(main())
