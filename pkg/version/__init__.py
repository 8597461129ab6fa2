# -*- coding: UTF-8 -*-
"""
Version
=======
@ Ext Ring

Author
------
Ext Ring contributors

Description
-----------
Read the version number of `ext_ring` without importing the package, so that the
build backend works before the dependencies are installed.
"""

import os
import importlib.util


__all__ = ("__version__",)


def _load_version(path: str) -> str:
    """Execute the stand-alone module `path` and return its `__version__`."""
    if not os.path.isfile(path):
        raise ImportError('version: The version file is missing: "{0}".'.format(path))
    spec = importlib.util.spec_from_file_location("ext_ring_version", path)
    if spec is None or spec.loader is None:
        raise ImportError('version: Cannot load the version file "{0}".'.format(path))
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return str(module.__version__)


__version__ = _load_version(
    os.path.join(os.path.dirname(os.path.dirname(__file__)), "ext_ring", "version.py")
)
