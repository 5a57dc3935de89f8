# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.oracle
==========

Enumeration of subset chains, subspaces, and complete flags over small
prime fields.

"""

from .core import *
