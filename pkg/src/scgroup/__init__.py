"""Exact construction and verification of rank-3 string C-groups of order 4p^m."""

from .core import (
    GroupTable,
    SubgroupSet,
    SylowError,
    abelian_involution_split,
    close_subgroup,
    commutator,
    conjugate,
    cyclic_group,
    direct_product,
    element_order,
    frattini_of_pgroup,
    intersect,
    klein_four,
    minimal_generating_rank,
    nilpotency_class,
    p_part,
    power,
    subgroup_table,
)
from .enumerator import (
    SearchResult,
    dedupe,
    enumerate_involutions,
    search_string_cgroups,
    structural_audit,
)
from .extensions import (
    AbelianParams,
    GElement,
    build_abelian_family,
    build_maxclass_family,
    decompose_by_involution_action,
    g_multiply,
)
from .identities import (
    binom,
    check_binomial_identities,
    check_binomial_identities_range,
    sigma_expansion_coefficients,
)
from .maxclass import (
    PGroupAlgebra,
    PGroupParams,
    build_pgroup,
    check_conjugacy_expansion,
    hughes_property_holds,
    sigma,
    tau,
    verify_automorphism,
    verify_presentation,
)
from .verifier import (
    SchlafliType,
    SggiCandidate,
    VerificationReport,
    dual,
    is_degenerate,
    is_tight,
    schlafli,
    verify,
)

__all__ = [
    "AbelianParams",
    "GElement",
    "GroupTable",
    "PGroupAlgebra",
    "PGroupParams",
    "SchlafliType",
    "SearchResult",
    "SggiCandidate",
    "SubgroupSet",
    "SylowError",
    "VerificationReport",
    "abelian_involution_split",
    "binom",
    "build_abelian_family",
    "build_maxclass_family",
    "build_pgroup",
    "check_binomial_identities",
    "check_binomial_identities_range",
    "check_conjugacy_expansion",
    "close_subgroup",
    "commutator",
    "conjugate",
    "cyclic_group",
    "decompose_by_involution_action",
    "dedupe",
    "direct_product",
    "dual",
    "element_order",
    "enumerate_involutions",
    "frattini_of_pgroup",
    "g_multiply",
    "hughes_property_holds",
    "intersect",
    "is_degenerate",
    "is_tight",
    "klein_four",
    "minimal_generating_rank",
    "nilpotency_class",
    "p_part",
    "power",
    "schlafli",
    "search_string_cgroups",
    "sigma",
    "sigma_expansion_coefficients",
    "structural_audit",
    "subgroup_table",
    "tau",
    "verify",
    "verify_automorphism",
    "verify_presentation",
]
