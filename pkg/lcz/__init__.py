# Licensed under a 3-clause BSD style license - see LICENSE.rst

"""
Exact verification of Lambek-Carlitz type characterizations of formal
power series and arithmetical functions.

Sub-packages: `lcz.exactnum`, `lcz.series`, `lcz.arithfun`,
`lcz.bintype`, `lcz.characterize`, `lcz.oracle`, and the ``lcz``
command in `lcz.cli`.  Run-wide defaults are in `lcz.defaults`.
"""

from ._astropy_init import *
