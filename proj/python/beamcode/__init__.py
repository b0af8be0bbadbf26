"""Beamspace subspace sensing codes.

Construction of BPSK-code, antenna-selection and convolutional-beamspace
beamformers, subspace-distance analysis with the associated bounds, and a
reproducible Monte Carlo harness for ML decoding error rates.
"""

from beamcode._core import *  # noqa: F401,F403
from beamcode._core import __version__  # noqa: F401
