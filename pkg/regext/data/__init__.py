"""
regext Data

Seeded corpus generation and the named reference modules.
"""
