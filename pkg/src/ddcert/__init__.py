"""Certification toolkit for the degree/diameter problem."""

__version__ = "0.1.0"
