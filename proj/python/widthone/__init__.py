"""Exact sums of width-one matrices and mean earth mover's distance."""

from ._core import (
    FeasibilityError,
    binomial,
    biword_to_matrix,
    compositions,
    convolution_check,
    corner_count_convolution,
    emd,
    entry_rsk,
    entry_rsk_4f3,
    entry_stanley,
    f43_unit,
    h_poly_closed,
    h_poly_shelling,
    is_monge,
    is_width_one,
    matrix_to_biword,
    mean_emd,
    mean_emd_oracle,
    nw_corner,
    pochhammer,
    sum_matrix,
    width_one_count,
)

__all__ = [
    "FeasibilityError",
    "binomial",
    "biword_to_matrix",
    "compositions",
    "convolution_check",
    "corner_count_convolution",
    "emd",
    "entry_rsk",
    "entry_rsk_4f3",
    "entry_stanley",
    "f43_unit",
    "h_poly_closed",
    "h_poly_shelling",
    "is_monge",
    "is_width_one",
    "matrix_to_biword",
    "mean_emd",
    "mean_emd_oracle",
    "nw_corner",
    "pochhammer",
    "sum_matrix",
    "width_one_count",
]

__version__ = "0.1.0"
