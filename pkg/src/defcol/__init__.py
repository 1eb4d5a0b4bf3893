"""Defective edge colouring of multigraphs.

A d-defective colouring lets every vertex meet up to ``d`` edges of one
colour.  The package colours any loop-free multigraph with at most
ceil(delta/d) colours for even d and ceil((3 delta - 1)/(3d - 1)) for odd d,
and ships the factor machinery, bounds, an exact oracle for small graphs and
generators for the extremal families.
"""

from .bounds import *  # noqa: F401,F403
from .colouring import *  # noqa: F401,F403
from .constructions import *  # noqa: F401,F403
from .defective import *  # noqa: F401,F403
from .errors import GraphFormatError, InternalContradiction, PreconditionError
from .factors import *  # noqa: F401,F403
from .graph import *  # noqa: F401,F403
from .matching import maximum_matching
from .proper import *  # noqa: F401,F403

__version__ = "0.1.0"
