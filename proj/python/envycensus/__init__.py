"""EF1/EFX allocation census for two agents with monotone valuations."""

from ._core import *  # noqa: F401,F403
from ._core import InvalidBundle, InvalidInput, __doc__  # noqa: F401

__version__ = "0.1.0"
