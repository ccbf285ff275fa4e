r'''
Configuration: built-in defaults merged with a user YAML file.

.. code-block:: yaml

    grid:
      nbound: 4
      dens: [1, 2, 3]
    colors: none

(c) conecalc developers, MIT
'''

import copy
import mergedeep

from . import yaml
from .linalg import ParseError
from .oracle import GridSpec

DEFAULTS = {
    'grid': {
        'nbound': 4,
        'dens': [1, 2, 3],
    },
    'colors': 'none',
}


def read(filename=None):
    r'''
Return the configuration.

:param str filename: YAML file merged over :py:data:`DEFAULTS` (optional).
:rtype: dict
    '''

    ret = copy.deepcopy(DEFAULTS)

    if filename is None:
        return ret

    data = yaml.read(filename)

    if data is None:
        return ret

    if type(data) != dict:
        raise IOError('"{0:s}" must contain a mapping'.format(filename))

    mergedeep.merge(ret, data, strategy=mergedeep.Strategy.REPLACE)

    if ret['colors'] not in ['none', 'dark']:
        raise IOError('Unknown colors "{0:s}"'.format(str(ret['colors'])))

    return ret


def parse_dens(text):
    r'''
Parse a list of denominators: ``"1,2,3"``.
    '''

    try:
        return [int(i) for i in filter(None, text.split(','))]
    except ValueError:
        raise ParseError('Denominators must read e.g. "1,2,3", found "{0:s}"'.format(text))


def grid(config, dim, nbound=None, dens=None):
    r'''
Grid from configuration, overridden by explicit values.

:param dict config: See :py:func:`read`.
:param int dim: Dimension.
:param int nbound: Numerator bound (``None``: from configuration).
:param list dens: Denominators (``None``: from configuration).
:rtype: conecalc.oracle.GridSpec
    '''

    nbound = nbound if nbound is not None else config['grid']['nbound']
    dens = dens if dens is not None else config['grid']['dens']

    return GridSpec(dim, int(nbound), tuple(int(q) for q in dens))
