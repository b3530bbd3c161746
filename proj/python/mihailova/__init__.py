"""Free groups, Mihailova subgroups, Peiffer reductions and Aut(F_3) embeddings."""

from ._core import (
    MihailovaError,
    ParseError,
    Presentation,
    Verdict,
    Word,
    abelianize,
    are_conjugate,
    check_strengthened_conciseness,
    commutator,
    concise_refinement,
    conjugate,
    cyclic_reduce,
    equal_in_H,
    fn_into_f2,
    in_kernel_of_pi,
    in_M,
    is_concise,
    mihailova_generators,
    normal_closure_contains,
    orbit_undecidable_subgroup,
    pi,
    reduce_identity,
    relator_family,
    root,
)

__all__ = [name for name in dir() if not name.startswith("_")]
