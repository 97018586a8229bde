"""Enumeration of skew braces of small order and their Yang-Baxter solutions."""

__version__ = "0.1.0"

from .groups import (  # noqa: F401
    FiniteGroup,
    GroupMap,
    Automorphism,
    AutGroup,
    make_group,
    trivial_group,
    cyclic,
    direct_product,
    semidirect_product,
    generalized_quaternion,
    subgroup_closure,
    minimal_generating_set,
    is_abelian,
    center,
    is_isomorphic,
    automorphism_group,
)
from .catalog import catalog_groups, catalog_id, group_by_id  # noqa: F401
from .holomorph import (  # noqa: F401
    Holomorph,
    LambdaAssignment,
    holomorph,
    enumerate_regular_subgroups,
    dedup_up_to_aut,
    brace_classes,
)
from .brace import (  # noqa: F401
    SkewBrace,
    RadicalRing,
    make_brace,
    from_assignment,
    trivial_brace,
    opposite_trivial_brace,
    factorization_brace,
    is_brace_isomorphic,
    socle,
    is_ideal,
    quotient_brace,
    is_two_sided,
    to_radical_ring,
    from_radical_ring,
)
from .ybe import (  # noqa: F401
    SetSolution,
    from_brace,
    check_yang_baxter,
    is_involutive,
    is_nondegenerate,
    check_braiding_operator,
    venkov_solution,
    guitar_map,
    guitar_map_inverse,
    check_guitar_equivalence,
    restrict_solution,
)
from .counts import count_of_order, compute_report  # noqa: F401
from .db import BraceRecord, build_records, read_db, write_db  # noqa: F401
