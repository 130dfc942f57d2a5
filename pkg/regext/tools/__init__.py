"""
regext Tools

This package contains the bound formulas, the checkers that compare them with computed
invariants, instance verification and the dict-returning tool functions exposed by the server.
"""
