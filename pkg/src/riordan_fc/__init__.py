"""Exact Riordan-array toolkit for Fuss-Catalan triangles and their production matrices."""

from .fusscatalan import coefficient_array, fc, fc_number, fc_param, fcr, fcr_array, hankel_transform, pre_fcr_array, tau
from .production import AZPair, ProdMatrix, az_pair, from_az, product_az, production_matrix
from .riordan import AlmostRiordan, LTMatrix, Riordan, SquareGrid, inverse, multiply, to_matrix
from .series import Rat, Series, SeriesError, compose, gr_series, revert, sqrt

__all__ = [
    "AZPair", "AlmostRiordan", "coefficient_array", "fcr_array", "pre_fcr_array", "LTMatrix", "ProdMatrix", "Rat", "Riordan", "Series", "SeriesError",
    "SquareGrid", "az_pair", "compose", "fc", "fc_number", "fc_param", "fcr", "from_az", "gr_series",
    "hankel_transform", "inverse", "multiply", "product_az", "production_matrix", "revert", "sqrt",
    "tau", "to_matrix",
]
