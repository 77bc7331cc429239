"""Signed monomer-dimer matchings of generalized rectangles G x P_n, n in Z."""

__version__ = "0.1.0"
