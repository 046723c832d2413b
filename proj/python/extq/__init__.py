"""Exact invariants of cyclic quotients of the projective torus."""

from ._core import (
    BernsteinPoint,
    BoundExceeded,
    CheckReport,
    Component,
    ComponentContribution,
    ExtQuotPoint,
    FixedSetDescriptor,
    Isotropy,
    KRanks,
    LocalFieldData,
    ProjectivePoint,
    RationalAngle,
    ReprLabel,
    ShiftElement,
    __version__,
    act,
    admissible_n,
    betti_table,
    binomial,
    character_row,
    check_square,
    component_betti,
    component_contribution,
    divisors,
    elliptic_fixed_points,
    enumerate_components,
    fibre_cardinality,
    fixed_set_descriptor,
    gcd,
    graded_invariants,
    graded_invariants_oracle,
    inf_ch,
    is_prime,
    isolated_point_count,
    ktheory_ranks,
    mu_label,
    odd_divisors,
    parse_point,
    prime_case_report,
    project,
    rational_lattice,
    reduced_invariants,
    total_dim,
    total_dim_half,
    totient,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
