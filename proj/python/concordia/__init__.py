"""Exact dependence coefficients of bivariate copulas.

Expressions are built from the base copulas M, W and Pi, shuffles of M,
ordinal sums, reflections and convex combinations; the library evaluates
them pointwise, computes Spearman's rho, Kendall's tau, Spearman's
footrule, Gini's gamma, Blomqvist's beta and Chatterjee's xi in closed
form, answers geometric queries about the attainable (phi, gamma, tau)
region, and constructs a copula hitting any attainable target triple.

Rational inputs (ints, fractions.Fraction, "p/q" strings) keep every
computation exact; floats run in ordinary double precision.
"""

from concordia._core import (  # noqa: F401
    ArgumentError,
    Expr,
    NotAShuffle,
    NotComputableExactly,
    OutOfFace,
    OutOfRegion,
    ValidationError,
    all_measures,
    attain,
    attain_face,
    beta,
    box_volume_fraction,
    cb_measures,
    checkerboard,
    concordance_q,
    convex,
    diagonal,
    eval,
    gamma,
    h_map,
    involution_a,
    m_copula,
    make_family,
    mc_measures,
    mean_tau_spread,
    opposite_diagonal,
    ordinal,
    parse,
    phi,
    pi_copula,
    projection_area,
    rect_volume,
    reflect,
    region_classify,
    region_contains,
    region_mesh,
    region_volume,
    rho,
    sample,
    shuffle,
    tau,
    tau_bounds,
    w_copula,
    xi,
)

__all__ = [
    "ArgumentError",
    "Expr",
    "NotAShuffle",
    "NotComputableExactly",
    "OutOfFace",
    "OutOfRegion",
    "ValidationError",
    "all_measures",
    "attain",
    "attain_face",
    "beta",
    "box_volume_fraction",
    "cb_measures",
    "checkerboard",
    "concordance_q",
    "convex",
    "diagonal",
    "eval",
    "gamma",
    "h_map",
    "involution_a",
    "m_copula",
    "make_family",
    "mc_measures",
    "mean_tau_spread",
    "opposite_diagonal",
    "ordinal",
    "parse",
    "phi",
    "pi_copula",
    "projection_area",
    "rect_volume",
    "reflect",
    "region_classify",
    "region_contains",
    "region_mesh",
    "region_volume",
    "rho",
    "sample",
    "shuffle",
    "tau",
    "tau_bounds",
    "w_copula",
    "xi",
]

__version__ = "0.1.0"
