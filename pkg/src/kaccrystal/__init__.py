"""Combinatorial crystals of Kac modules over the general linear superalgebra."""

from . import base, embedding, kac, rsk, tableaux, verify, wordops  # noqa: F401

__version__ = "0.1.0"
