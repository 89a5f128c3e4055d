"""Named circulant cones: membership, extremal rays and dual witnesses."""
from .cliques import maximal_cliques_circulant
from .copositive import (
    cop5_extremal_catalog,
    cop5_witness_families,
    cop_member,
    cop_necessary,
    cop_validate,
    horn_vector,
    spn5_extremal_catalog,
    spn_member,
)
from .cp import (
    cp5_extremal_catalog,
    cp6_face_catalogs,
    cp7_face_catalogs,
    cp_member,
    separable_ball_radius,
    spectral_decomposition,
)
from .dnn import (
    circ_ewp_extremal,
    circ_psd_extremal,
    dnn_extremal_catalog,
    dnn_member,
    extremal_low_support,
)
from .families import Catalog, Ray, ThetaFamily
from .fejer_riesz import NotNonnegativeError, fejer_riesz_factor

__all__ = [
    "Catalog", "Ray", "ThetaFamily", "NotNonnegativeError",
    "circ_ewp_extremal", "circ_psd_extremal", "cop5_extremal_catalog", "cop5_witness_families",
    "cop_member", "cop_necessary", "cop_validate", "cp5_extremal_catalog", "cp6_face_catalogs", "cp7_face_catalogs",
    "cp_member", "dnn_extremal_catalog", "dnn_member", "extremal_low_support", "fejer_riesz_factor",
    "horn_vector", "maximal_cliques_circulant", "separable_ball_radius", "spectral_decomposition",
    "spn5_extremal_catalog", "spn_member",
]
