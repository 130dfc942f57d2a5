"""
regext: regularity, Ext modules and homological degree.

This package computes minimal free resolutions, Hilbert data, Ext modules,
local cohomology dimensions and the homological degree of finitely generated
graded modules over a polynomial ring over a prime field, and checks the
known regularity and degree bounds on exact, desk-scale instances.
"""

__version__ = "0.1.0"
