"""Quasi-shuffle algebra toolkit: harmonic products, kernel certificates and
parametrized multiple series evaluation."""

from _pmskit import *  # noqa: F401,F403
from _pmskit import __version__  # noqa: F401
