"""Cyclotomic nilHecke algebras, Schur polynomials and Grassmannian Schubert calculus over the integers."""

__version__ = "0.1.0"
