"""Circulant cones and cyclic two-party states: spectra, PPT and separability tests, cone catalogs."""
from .certificates import ConeVerdict, Decomposition, PptViolation, Verdict, Witness
from .circulant import circ, circ_eigenvalues, convolve, dft, g_matrix, idft, reverse, symmetric_basis
from .cones import (
    cop5_extremal_catalog,
    cp5_extremal_catalog,
    cp6_face_catalogs,
    cp7_face_catalogs,
    cp_member,
    dnn_extremal_catalog,
    dnn_member,
    fejer_riesz_factor,
    maximal_cliques_circulant,
)
from .dicke import detect_not_cp, dicke_ppt_check, dicke_sep_check, dicke_to_lcsi, project_circulant
from .lcsi import AbcTriple, build_dense, is_ppt, is_psd, partial_transpose, spectrum
from .spc import SemiPositiveCone, enumerate_extremal_rays, is_extremal_ray
from .tcp import TcpDecomposition, construct_ppt_entangled, extremal_b_ppt_check, extremal_b_sep_check, verify_tcp

__version__ = "0.1.0"
