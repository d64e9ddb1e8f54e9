"""Poincare constants, spectral gaps and fixed-point certificates on link graphs."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
