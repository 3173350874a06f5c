"""Exact glide, slide and beta-Grothendieck polynomial combinatorics."""

from .basis import (
    GlideIndex,
    expand_in_glide,
    expand_unsplit,
    fundamental_qs,
    glide_order_key,
    glide_poly,
    multifundamental_truncated,
    quasisym_glide,
    reassemble_glide,
    slide_poly,
    stable_limit_check,
)
from .composition import Komposition, enumerate_glides, enumerate_unsplit_glides, is_glide
from .genomic import Letter, bump_runs, genomic_shuffle, glide_product, gss, lr_coefficients, shuffle
from .grothendieck import (
    glide_expansion,
    grothendieck_poly,
    grothendieck_via_divided_difference,
    schubert_poly,
)
from .pipedream import PipeDream, destandardize, enumerate_pd, enumerate_qpd
from .polyring import BetaInt, PolyZB
from .tableau import SetValuedTableau, buch_poly, enumerate_qsvt, enumerate_svt, phi, phi_inverse

__version__ = "0.1.0"
