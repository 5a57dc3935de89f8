# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.utils
=========

JSON reading and writing shared by every lcz file format.

"""

from .core import *
