"""Brute-force point counts over small GL_n(F_q) as an independent oracle."""

from .counting import (
    ClassFunction,
    commutator_distribution,
    convolve,
    genus_count,
    genus_count_direct,
    hom_count,
)
from .groups import GroupTable, build_gl, gl_order, primitive_root_of_unity
from .kernels import HAVE_NUMBA, default_backend

__all__ = [
    "ClassFunction",
    "GroupTable",
    "HAVE_NUMBA",
    "build_gl",
    "commutator_distribution",
    "convolve",
    "default_backend",
    "genus_count",
    "genus_count_direct",
    "gl_order",
    "hom_count",
    "primitive_root_of_unity",
]
