"""Transmon-in-waveguide scattering and photon statistics."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__, constants  # noqa: F401
