r'''
Exact convex-cone calculus: dual cones, representation families, and preference representations.

(c) conecalc developers, MIT
'''

from ._version import *
from . import linalg
from . import feasibility
from . import cone
from . import family
from . import decision
from . import oracle
from . import text
from . import convert
from . import config
from . import rich
from . import yaml
