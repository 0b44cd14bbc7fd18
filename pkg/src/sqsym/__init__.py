"""Chromatic quasisymmetric invariants of directed signed graphs.

The package computes the invariant ``X(x; t)`` three independent ways and
implements the algebra it lives in (monomial and fundamental families,
products, coproduct), signed posets, and the arrangement of a signed graph.
"""

from ._guard import InvalidInput, SizeGuardError, SqsymError, set_max_vertices, vertex_limit
from .algebra import (
    MonomialIndex,
    SqsExpr,
    TPoly,
    coproduct,
    dimension,
    is_signed_symmetric,
    product,
    quasi_shuffle,
    specialize,
    truncate_expand,
)
from .arrangement import Chamber, Hyperplane, chambers, hyperplanes_of, verify_zaslavsky
from .chromatic import (
    chromatic,
    chromatic_chambers,
    chromatic_oracle,
    chromatic_theorem,
    des_sigma,
    inv_count,
    is_invariant_symmetric,
    phi_involution,
    sigma_rank,
    specialize_count,
)
from .fundamental import FundamentalIndex, f_product, f_to_monomial, is_minimal, minimal_bijection, reduce_to_minimal
from .graphs import (
    DirectedSignedGraph,
    SignedGraph,
    acyclic_orientations,
    build_named,
    coloring_stats,
    double_cover,
    is_acyclic,
    is_balanced,
    region_orientation,
    switch_coloring,
    switch_graph,
)
from .io import load_document, render_expr, render_tpoly
from .posets import Labeling, SignedPoset, gamma_enumerator, linear_extensions, poset_from_orientation

__all__ = [name for name in dir() if not name.startswith("_")]
