"""srings: exhaustive-search engine for finite rings and their Smarandache
substructures, element censuses and ideal lattices."""

from .config import DEFAULT_LIMITS, EngineLimits
from .errors import CapacityError, NotALatticeError, SpecSyntaxError, ValidationError
from .rings import (
    RingHandle,
    characteristic,
    group_ring,
    hyperring,
    matrix_ring,
    product_ring,
    quaternion_ring,
    quotient_ring,
    ring_axiom_audit,
    semigroup_ring,
    zn,
)
from .specparse import parse, print_spec, ring_from_text
from .structures import (
    CayleyStructure,
    build_group,
    build_semigroup,
    cyclic_group,
    dihedral_group,
    is_s_semigroup,
    s_normal_subgroups,
    subgroups_and_subsemigroups,
    symmetric_group,
    symmetric_semigroup,
    zn_multiplicative,
)

__all__ = [
    "DEFAULT_LIMITS",
    "EngineLimits",
    "CapacityError",
    "NotALatticeError",
    "SpecSyntaxError",
    "ValidationError",
    "RingHandle",
    "CayleyStructure",
    "characteristic",
    "group_ring",
    "hyperring",
    "matrix_ring",
    "product_ring",
    "quaternion_ring",
    "quotient_ring",
    "ring_axiom_audit",
    "semigroup_ring",
    "zn",
    "parse",
    "print_spec",
    "ring_from_text",
    "build_group",
    "build_semigroup",
    "cyclic_group",
    "dihedral_group",
    "is_s_semigroup",
    "s_normal_subgroups",
    "subgroups_and_subsemigroups",
    "symmetric_group",
    "symmetric_semigroup",
    "zn_multiplicative",
]
