"""Exact verification kernel for octonion and Clifford-algebra identities."""

__version__ = "0.1.0"
