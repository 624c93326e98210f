"""Exact computation with small finite unital rings.

Rings are Cayley tables (:class:`FiniteRing`); the submodules add element
and ring predicates, ideal structure, homomorphism search, enumeration up to
isomorphism and a small expression language for naming rings.
"""

from .dsl import build_ring, parse_ring_spec
from .morphisms import (
    Homomorphism,
    are_isomorphic,
    enumerate_unital_homs,
    find_embedding,
    find_isomorphism,
    fingerprint,
    minimal_generators,
)
from .predicates import (
    classify_element,
    has_nontrivial_idempotents,
    invo_clean_status,
    is_boolean_ring,
    is_tripotent_element,
    is_tripotent_ring,
    is_weakly_tripotent_element,
    is_weakly_tripotent_ring,
    ring_properties,
)
from .ring import (
    FiniteRing,
    build_cyclic,
    build_gf,
    build_poly_quotient,
    characteristic,
    direct_product,
    power,
    verify_axioms,
    zero_ring,
)
from .search import abelian_group_types, audit_theorem, enumerate_rings, hunt
from .structure import (
    Ideal,
    all_ideals,
    find_trivial_meet_maximal,
    jacobson_radical,
    maximal_ideals,
    nilradical,
    peirce_splittings,
    principal_ideal,
    quotient_by_ideal,
)
from .verify import verify_paper

__version__ = "0.1.0"
