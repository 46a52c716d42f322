"""Finite semigroups as Cayley tables: Green's relations, H-commutativity,
semilattice decompositions, dominions with zigzag certificates, and
exhaustive enumeration of small cases."""
from .congruence import (
    Congruence,
    congruence_closure,
    eta_class_report,
    least_combinatorial_congruence,
    least_semilattice_congruence,
    quotient,
    rho_partition,
)
from .constructors import (
    FIXTURES,
    cyclic_group,
    direct_product,
    fixture,
    monogenic,
    s3_named,
    symmetric_group,
    zero_direct_union,
)
from .core import (
    Semigroup,
    SubsetHandle,
    adjoin_identity,
    adjoin_zero,
    classify,
    idempotents,
    new_semigroup,
    power,
    subsemigroup_closure,
)
from .dominion import (
    TensorClosure,
    ZigzagWitness,
    dominion,
    saturation_scan,
    validate_zigzag,
    zigzag_search,
)
from .enumeration import EnumerationSpec, all_semigroups, all_subsemigroups, extensions
from .errors import (
    AssociativityViolation,
    BadLabels,
    BudgetExceeded,
    CostGuard,
    EmptySeed,
    InconsistentOrder,
    IndexOutOfRange,
    NoCofactor,
    NotACongruence,
    NotClosedSubset,
    NotHCommutative,
    NotIdempotent,
    OrderOverflow,
    PreconditionFailed,
    SemigroupError,
    UnsupportedOrder,
)
from .formats import format_smg, parse_smg
from .hcomm import (
    clifford_profile,
    hc_witness,
    is_h_commutative,
    is_h_commutative_tully,
    power_idempotent_witness,
)
from .relations import Partition, green, lambda_relation, natural_leq

__version__ = "0.1.0"
