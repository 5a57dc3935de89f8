"""pytest configuration for lcz.

Lives inside the package so that ``lcz.test()`` picks it up as well as a
plain ``pytest`` run from the source tree.

"""

import os

try:
    from pytest_astropy_header.display import (
        PYTEST_HEADER_MODULES, TESTED_VERSIONS
    )
    ASTROPY_HEADER = True
except ImportError:
    ASTROPY_HEADER = False

try:
    from hypothesis import settings
except ImportError:
    settings = None


if settings is not None:
    # exact rational arithmetic makes example timing uneven
    settings.register_profile("lcz", deadline=None, max_examples=50)
    settings.load_profile("lcz")


def pytest_configure(config):
    """Show the versions lcz is tested against in the pytest header."""

    if not ASTROPY_HEADER:
        return

    config.option.astropy_header = True

    # only the packages lcz imports
    for name in ('Pandas', 'Matplotlib', 'h5py', 'Scipy'):
        PYTEST_HEADER_MODULES.pop(name, None)
    PYTEST_HEADER_MODULES['hypothesis'] = 'hypothesis'

    from . import __version__
    packagename = os.path.basename(os.path.dirname(__file__))
    TESTED_VERSIONS[packagename] = __version__
