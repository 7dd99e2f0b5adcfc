"""Sawtooth-kernel Fourier identities.

Riemann-Stieltjes integration against piecewise integrators, Fourier
coefficients and Cesaro means on arbitrary intervals, midpoint identities
recovering one-sided limits, arithmetic-progression subseries kernels in
closed form, and finite Fourier series modulo q at rational points.
"""

from genfourier._core import *  # noqa: F401,F403
from genfourier._core import __version__  # noqa: F401
