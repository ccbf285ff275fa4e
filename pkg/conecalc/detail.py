r'''
Implementation details of the command-line tools.
Not part of public API.

(c) conecalc developers, MIT
'''

from . import config
from . import text
from . import version
from . import yaml
from .linalg import format_vector
from .rich import verdict


def add_common(parser):
    r'''
Add the options shared by all tools to an ``argparse.ArgumentParser``.
    '''

    parser.add_argument(      '--config', required=False)
    parser.add_argument(      '--colors', required=False, choices=['none', 'dark'])
    parser.add_argument(      '--format', required=False, default='text', choices=['text'])
    parser.add_argument('-o', '--output', required=False)
    parser.add_argument('-f', '--force', required=False, action='store_true')
    parser.add_argument(      '--verbose', required=False, action='store_true')
    parser.add_argument('-v', '--version', action='version', version=version)


def settings(args):
    r'''
Configuration for the parsed arguments (``--colors`` overrides the configuration file).
    '''

    ret = config.read(args.config)

    if args.colors is not None:
        ret['colors'] = args.colors

    return ret


def show_verdict(value, conf):
    print(verdict(value, conf['colors']))


def show_vectors(vectors):
    for x in vectors:
        print(format_vector(x))


def finish(args, report):
    r'''
Write the report to ``--output`` (if specified).
    '''

    if args.output:
        yaml.dump(args.output, report, args.force)

    return 0


def read_cone(filename):
    return text.read(filename, text.parse_cone)


def read_family(filename):
    return text.read(filename, text.parse_family)


def read_relation(filename):
    return text.read(filename, text.parse_relation)


def read_system(filename):
    return text.read(filename, text.parse_system)
