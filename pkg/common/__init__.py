"""Shared helpers: exact rationals, the error hierarchy and logging setup."""
