# -*- coding: UTF-8 -*-
"""
Tests
=====
@ Ext Ring

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Testing codes powered by `pytest` and `hypothesis`. This namespace module is used
for providing the unit tests for the package.
"""
