# -*- coding: UTF-8 -*-
"""
CLI
===
@ Ext Ring

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The batch command line `ext`: load a group or an algebra, compute its cohomology
ring up to a degree, verify the identities, and write a report.
"""

from pkgutil import extend_path

# Import sub-modules.
from . import config
from . import parse
from . import report
from . import run

from .config import RunConfig, DEFAULT_MAX_DEGREE
from .parse import parse_input, load_input
from .report import render
from .run import build_parser, main

__all__ = (
    "config",
    "parse",
    "report",
    "run",
    "RunConfig",
    "DEFAULT_MAX_DEGREE",
    "parse_input",
    "load_input",
    "render",
    "build_parser",
    "main",
)

# Set this local module as the prefered one
__path__ = extend_path(__path__, __name__)

# Delete private sub-modules and objects
del extend_path
