# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.exactnum
============

Exact rational scalars and the q-analog number kernel.

"""

from .core import *
