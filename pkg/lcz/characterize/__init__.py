# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.characterize
================

Equivalence suites for series and arithmetical functions, with
reproducible counterexample witnesses.

"""

from .core import *
