# Licensed under a 3-clause BSD style license - see LICENSE.rst
import os

__all__ = ['__version__', 'test']

try:
    from .version import version as __version__
except ImportError:
    # source checkout without a build; fall back to the installed metadata
    try:
        from importlib.metadata import PackageNotFoundError, version
        __version__ = version('lcz')
    except PackageNotFoundError:
        __version__ = ''

# lcz.test() runs the package tests and doctests with pytest
from astropy.tests.runner import TestRunner
test = TestRunner.make_test_runner_in(os.path.dirname(__file__))
