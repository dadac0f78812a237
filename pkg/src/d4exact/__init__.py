"""Exact-arithmetic toolkit for the affine vertex algebra of type D4 at
level -14/3: singular-vector search, category-O highest-weight
classification through the Zhu algebra, and the nilpotent-cone test for
the quasi-lisse property."""

__version__ = "0.1.0"
