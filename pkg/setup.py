#!/usr/bin/env python
# Licensed under a 3-clause BSD style license - see LICENSE.rst

# NOTE: package metadata and requirements are in setup.cfg.

import os
import sys

from setuptools import setup

LEGACY_HELP = """
Note: '{command}' is no longer supported.  Use

    tox -e {env}

or, with lcz installed in editable mode (pip install -e .[test,docs]),

    {direct}
"""

LEGACY = {
    'test': ('test', 'pytest lcz docs'),
    'build_docs': ('build_docs', 'cd docs; sphinx-build -b html . _build/html'),
    'build_sphinx': ('build_docs', 'cd docs; sphinx-build -b html . _build/html'),
}

for command, (env, direct) in LEGACY.items():
    if command in sys.argv:
        print(LEGACY_HELP.format(command='python setup.py ' + command,
                                 env=env, direct=direct))
        sys.exit(1)

VERSION_TEMPLATE = """
# Note that we need to fall back to the hard-coded version if either
# setuptools_scm can't be imported or setuptools_scm can't determine the
# version, so we catch the generic 'Exception'.
try:
    from setuptools_scm import get_version
    version = get_version(root='..', relative_to=__file__)
except Exception:
    version = '{version}'
""".lstrip()

setup(use_scm_version={'write_to': os.path.join('lcz', 'version.py'),
                       'write_to_template': VERSION_TEMPLATE})
