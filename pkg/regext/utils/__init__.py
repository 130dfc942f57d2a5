"""
Processing engines for regext.

Exact algebra (prime field, polynomials, graded free modules), Groebner bases
and syzygies, resolutions, Hilbert data, Ext modules and the homological degree.
The tools and the server import the engines directly from these modules.
"""
