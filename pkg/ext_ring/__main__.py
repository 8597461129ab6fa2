# -*- coding: UTF-8 -*-
"""
Main
====
@ Ext Ring

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
`python -m ext_ring` runs the command line `ext`.
"""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
