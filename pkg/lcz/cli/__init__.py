# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.cli
=======

The ``lcz`` command-line interface.

"""

from .core import *
