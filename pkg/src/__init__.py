"""
Fusion control and p-nilpotency checks for small permutation groups
"""

__version__ = "1.0.0"
