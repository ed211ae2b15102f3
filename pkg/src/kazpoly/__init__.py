"""kazpoly: exact intersection-index computations for reductive groups.

Everything is computed over arbitrary-precision rationals; floating point
never enters a result path.
"""

__version__ = "0.1.0"
