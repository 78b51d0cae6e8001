"""Discrete-time quantum walk used as a qubit memory."""

from ._qwmem import *  # noqa: F401,F403
from ._qwmem import __version__  # noqa: F401
