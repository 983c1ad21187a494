"""Exact algebra of torsion-translated subtori and cohomology jump loci."""

from ._core import (  # noqa: F401
    BudgetExceededError,
    IrrationalDirectionError,
    LevelError,
    ParseError,
    RankMismatchError,
    __version__,
    cohomology_dims,
    components,
    fox,
    galois_invariant,
    galois_orbit,
    grid_points,
    hnf,
    invert_set,
    jump_locus,
    non_torsion_probe,
    semicontinuity_check,
    set_equal,
    set_op,
    snf,
    symmetry_check,
    to_betti,
    to_dr,
    verify_locus,
)
