"""Single-loop nonadiabatic geometric quantum gates."""

from ._geoloop import *  # noqa: F401,F403
from ._geoloop import __doc__  # noqa: F401

__version__ = "0.1.0"
