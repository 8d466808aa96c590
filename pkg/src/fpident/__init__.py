"""Fix-point-free identities: exact polynomial invariants and structure checks."""

__version__ = "0.1.0"
